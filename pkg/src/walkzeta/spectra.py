"""Numeric spectra of exact characteristic polynomials.

Roots are found by the Aberth simultaneous iteration in double precision.
The polynomial is first split into exact square-free factors, so the
iteration only ever sees simple roots and converges quadratically; the
multiplicities come from the exact decomposition, not from clustering.
Closed-form eigenvalue maps translate vertex spectra (random walk or
adjacency) into arc-operator spectra for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .exact import Poly, square_free_decomposition

DEFAULT_TOLERANCE = 1e-8
RADICAND_SNAP = 1e-11  # below this, a radicand is treated as exactly zero


class RootConvergenceError(RuntimeError):
    """Aberth iteration failed to reach the residual target."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class SpectrumDomainError(ValueError):
    """Input outside the domain of a spectral map."""


@dataclass(frozen=True)
class SpectrumMultiset:
    """A multiset of complex numbers with the tolerance it was built at."""

    values: tuple[complex, ...]
    tolerance: float = DEFAULT_TOLERANCE
    max_residual: float = 0.0

    def __len__(self) -> int:
        return len(self.values)

    def clustered(self, eps: float = 1e-6) -> list[tuple[complex, int]]:
        """Group nearby values for display; does not affect comparisons."""
        groups: list[tuple[complex, int]] = []
        for z in sorted(self.values, key=lambda w: (w.real, w.imag)):
            for idx, (rep, count) in enumerate(groups):
                if abs(z - rep) <= eps:
                    groups[idx] = (rep, count + 1)
                    break
            else:
                groups.append((z, 1))
        return groups


@dataclass(frozen=True)
class CompareResult:
    equal: bool
    max_pair_distance: float


def _sorted_values(values) -> tuple[complex, ...]:
    return tuple(sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag)))


def _fujiwara_bound(monic_coeffs: np.ndarray) -> float:
    """Root modulus bound 2 max |a_{n-i}|^(1/i) for an ascending monic array.

    Far tighter than the Cauchy bound when coefficients span a wide range.
    """
    deg = len(monic_coeffs) - 1
    bound = 2.0 * max(
        abs(monic_coeffs[deg - i]) ** (1.0 / i) for i in range(1, deg + 1)
    )
    return bound if bound > 0 else 1.0


def _aberth(p: Poly, newton_tol: float = 1e-12, max_iter: int = 400) -> np.ndarray:
    """All roots of a square-free polynomial by Aberth's method.

    A point is accepted when its Newton correction |p/p'| drops below
    newton_tol (relative to max(1, |z|)), or when |p(z)| falls under the
    round-off bound eps * sum |a_i| |z|^i, past which double precision
    cannot place the root any better.
    """
    monic = p.monic()
    coeffs = np.array([float(c) for c in monic.coeffs], dtype=np.float64)
    deg = monic.degree
    if deg == 1:
        return np.array([complex(-monic.coeffs[0])])
    dcoeffs = npoly.polyder(coeffs)
    abs_coeffs = np.abs(coeffs)
    noise_scale = 4.0 * np.finfo(np.float64).eps
    radius = _fujiwara_bound(coeffs)
    # slight angular offset so the start is not symmetric about the real axis
    angles = 2.0 * np.pi * (np.arange(deg) + 0.5) / deg + 0.45
    z = radius * np.exp(1j * angles)
    for _ in range(max_iter):
        pv = npoly.polyval(z, coeffs)
        dv = npoly.polyval(z, dcoeffs)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv
        floor = noise_scale * npoly.polyval(np.abs(z), abs_coeffs)
        done = (np.abs(newton) <= newton_tol * np.maximum(1.0, np.abs(z))) | (
            np.abs(pv) <= floor
        )
        if np.all(done):
            return z - newton
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        repulsion = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * repulsion
        denom = np.where(denom == 0, 1e-300, denom)
        z = z - newton / denom
    residuals = np.abs(npoly.polyval(z, coeffs))
    raise RootConvergenceError(
        f"Aberth did not converge in {max_iter} iterations", residuals.tolist()
    )


def roots(p: Poly, tolerance: float = DEFAULT_TOLERANCE) -> SpectrumMultiset:
    """All complex roots of p with multiplicity.

    Exact square-free factors are extracted first (so multiple roots are
    never iterated on), then each factor is solved numerically.  The
    reported residual is max |p(z)| over returned roots, normalized by the
    Cauchy bound raised to the degree.
    """
    if p.degree < 1:
        raise ValueError("roots of a constant polynomial are undefined")
    vals: list[complex] = []
    for factor, multiplicity in square_free_decomposition(p):
        for z in _aberth(factor):
            vals.extend([complex(z)] * multiplicity)
    monic = p.monic()
    coeffs = np.array([float(c) for c in monic.coeffs], dtype=np.float64)
    scale = max(1.0, _fujiwara_bound(coeffs)) ** monic.degree
    residual = float(np.max(np.abs(npoly.polyval(np.array(vals), coeffs)))) / scale
    return SpectrumMultiset(_sorted_values(vals), tolerance, residual)


def real_roots(p: Poly, tolerance: float = DEFAULT_TOLERANCE) -> list[float]:
    """Roots of a real-rooted polynomial, sorted; rejects complex strays."""
    spectrum = roots(p, tolerance)
    worst = max((abs(z.imag) for z in spectrum.values), default=0.0)
    if worst > tolerance:
        raise SpectrumDomainError(f"polynomial is not real-rooted within {tolerance}: imag {worst}")
    return sorted(z.real for z in spectrum.values)


def _snap_radicand(value: float) -> float:
    if abs(value) < RADICAND_SNAP:
        return 0.0
    return value


def map_random_walk_spectrum(
    walk_eigs, m: int, n: int, tolerance: float = DEFAULT_TOLERANCE
) -> SpectrumMultiset:
    """Transition-matrix spectrum from random-walk eigenvalues.

    Each eigenvalue lam in [-1, 1] lifts to the conjugate pair
    lam +/- i sqrt(1 - lam^2) on the unit circle; m - n extra pairs of
    +1 and -1 fill the remaining dimensions.  Requires m >= n (for trees
    the closed form divides instead of multiplying, so no padding exists).
    """
    walk_eigs = list(walk_eigs)
    if m < n:
        raise SpectrumDomainError("spectral map needs m >= n; tree case has no padding")
    if len(walk_eigs) != n:
        raise ValueError(f"expected {n} random-walk eigenvalues, got {len(walk_eigs)}")
    vals: list[complex] = []
    for lam in walk_eigs:
        lam = float(lam)
        if abs(lam) > 1.0 + tolerance:
            raise SpectrumDomainError(f"random-walk eigenvalue {lam} outside [-1, 1]")
        radicand = _snap_radicand(1.0 - lam * lam)
        if radicand < 0:
            radicand = 0.0  # |lam| within tolerance of 1
        s = math.sqrt(radicand)
        vals.append(complex(lam, s))
        vals.append(complex(lam, -s))
    vals.extend([complex(1.0), complex(-1.0)] * (m - n))
    return SpectrumMultiset(_sorted_values(vals), tolerance)


def map_adjacency_spectrum(
    adj_eigs, k: int, m: int, n: int, tolerance: float = DEFAULT_TOLERANCE
) -> SpectrumMultiset:
    """Non-backtracking arc spectrum of a k-regular graph from adjacency eigenvalues.

    lam maps to lam/2 +/- i sqrt(k - 1 - lam^2/4), which has modulus
    sqrt(k - 1); when the radicand is negative (possible only past the
    Ramanujan window) the pair is real instead.  Padding of +/-1 pairs is
    as in the random-walk map.
    """
    adj_eigs = list(adj_eigs)
    if k < 2:
        raise SpectrumDomainError("adjacency map needs a k-regular graph with k >= 2")
    if len(adj_eigs) != n:
        raise ValueError(f"expected {n} adjacency eigenvalues, got {len(adj_eigs)}")
    if m < n:
        raise SpectrumDomainError("spectral map needs m >= n")
    vals: list[complex] = []
    for lam in adj_eigs:
        lam = float(lam)
        radicand = _snap_radicand((k - 1.0) - lam * lam / 4.0)
        if radicand >= 0:
            s = math.sqrt(radicand)
            vals.append(complex(lam / 2.0, s))
            vals.append(complex(lam / 2.0, -s))
        else:
            s = math.sqrt(-radicand)
            vals.append(complex(lam / 2.0 + s))
            vals.append(complex(lam / 2.0 - s))
    vals.extend([complex(1.0), complex(-1.0)] * (m - n))
    return SpectrumMultiset(_sorted_values(vals), tolerance)


def compare(
    left: SpectrumMultiset, right: SpectrumMultiset, tolerance: float | None = None
) -> CompareResult:
    """Multiset comparison by greedy nearest-neighbor pairing."""
    if tolerance is None:
        tolerance = max(left.tolerance, right.tolerance)
    if len(left) != len(right):
        return CompareResult(False, math.inf)
    remaining = list(right.values)
    worst = 0.0
    for z in left.values:
        best_idx = min(range(len(remaining)), key=lambda i: abs(z - remaining[i]))
        worst = max(worst, abs(z - remaining.pop(best_idx)))
    return CompareResult(worst <= tolerance, worst)


def conjugate_closed(spectrum: SpectrumMultiset, tolerance: float | None = None) -> bool:
    """True when the multiset equals its own conjugate within tolerance."""
    conj = SpectrumMultiset(
        _sorted_values(z.conjugate() for z in spectrum.values), spectrum.tolerance
    )
    return compare(spectrum, conj, tolerance).equal
