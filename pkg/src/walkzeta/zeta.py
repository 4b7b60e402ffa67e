"""Ihara zeta and second weighted zeta reciprocals, plus a cycle oracle.

The reciprocal of the zeta function is computed two independent ways: as
the arc-level determinant det(I - t(B - J0)) and through the vertex-level
three-term determinant with its (1 - t^2) prefactor.  A brute-force Euler
product over equivalence classes of prime reduced cycles serves as a
combinatorial cross-check on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exact import Matrix, Poly, RationalFunction, polymat_det
from .graphs import ArcSet, Graph, adjacency_matrix, betti, degree_info
from .operators import nonbacktracking_matrix, weighted_edge_matrix, arc_matrices

MAX_ORACLE_ARCS = 20
MAX_ORACLE_ORDER = 12

ONE_MINUS_T_SQUARED = Poly((1, 0, -1))


class OracleSizeError(ValueError):
    """The cycle oracle was asked for more than the size guard allows."""


class PowerSeries:
    """Power series truncated at a fixed order, rational coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls((1,), order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "PowerSeries":
        return cls(p.coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def _check_order(self, other: "PowerSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(
            (a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(
            (a - b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_order(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = Fraction(1) / a0
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out[k] = -acc * inv0
        return PowerSeries(out, self.order)

    def log(self) -> "PowerSeries":
        """Series logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        # d/dt log f = f'/f, integrated back with zero constant term
        deriv = PowerSeries(
            (k * c for k, c in enumerate(self.coeffs) if k), self.order
        )
        quotient = deriv * self.inverse()
        out = [Fraction(0)] * (self.order + 1)
        for k in range(1, self.order + 1):
            out[k] = quotient.coeffs[k - 1] / k
        return PowerSeries(out, self.order)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"


@dataclass(frozen=True)
class CycleClass:
    """Rotation class of a reduced closed arc sequence, canonical form."""

    arcs: tuple[int, ...]
    prime: bool

    @property
    def length(self) -> int:
        return len(self.arcs)


def ihara_reciprocal_edge_form(arcs: ArcSet) -> Poly:
    """1/zeta as det(I - t(B - J0)) over the arcs."""
    nb = nonbacktracking_matrix(arcs)
    size = len(arcs)
    entries = [
        [Poly((1 if i == j else 0, -nb[i, j])) for j in range(size)]
        for i in range(size)
    ]
    return polymat_det(entries, size)


def ihara_reciprocal_bass_form(g: Graph) -> RationalFunction:
    """1/zeta as (1 - t^2)^(r - 1) det(I - tA + t^2 (D - I)).

    r is the first Betti number; for trees the exponent is negative and the
    result is a genuine rational function.
    """
    adj = adjacency_matrix(g)
    degs = degree_info(g).degrees
    entries = [
        [
            Poly((1 if i == j else 0, -adj[i, j], degs[i] - 1 if i == j else 0))
            for j in range(g.n)
        ]
        for i in range(g.n)
    ]
    det = polymat_det(entries, 2 * g.n)
    prefactor = RationalFunction.from_power(ONE_MINUS_T_SQUARED, betti(g) - 1)
    return prefactor * det


class WeightedZetaForms(NamedTuple):
    edge_form: Poly
    bass_form: RationalFunction


def weighted_zeta_reciprocal(arcs: ArcSet, weights: Matrix) -> WeightedZetaForms:
    """Both determinant forms of the second weighted zeta reciprocal.

    The edge form is det(I - t(B_w - J0)) on arcs; the vertex form is
    (1 - t^2)^(m - n) det(I - tW + t^2 (D_w - I)) with D_w the diagonal of
    out-arc weight sums.  The two agree on simple graphs; an n x n weight
    matrix cannot see parallel-edge multiplicity, so on multigraphs the
    forms genuinely differ.
    """
    n = weights.rows
    bw = weighted_edge_matrix(arcs, weights)  # validates the weight support
    inv = arc_matrices(arcs).inversion
    size = len(arcs)
    wm = bw - inv
    edge_entries = [
        [Poly((1 if i == j else 0, -wm[i, j])) for j in range(size)]
        for i in range(size)
    ]
    edge = polymat_det(edge_entries, size)

    out_sums = [Fraction(0)] * n
    for a in range(size):
        out_sums[arcs.origin(a)] += weights[arcs.origin(a), arcs.terminus(a)]
    vertex_entries = [
        [
            Poly(
                (
                    1 if i == j else 0,
                    -weights[i, j],
                    out_sums[i] - 1 if i == j else 0,
                )
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    det = polymat_det(vertex_entries, 2 * n)
    prefactor = RationalFunction.from_power(ONE_MINUS_T_SQUARED, arcs.m - n)
    return WeightedZetaForms(edge, prefactor * det)


def _least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def _is_primitive(seq: tuple[int, ...]) -> bool:
    length = len(seq)
    for period in range(1, length):
        if length % period == 0 and seq == seq[period:] + seq[:period]:
            return False
    return True


def prime_cycle_classes(arcs: ArcSet, order: int) -> list[CycleClass]:
    """All rotation classes of reduced closed cycles up to the given length.

    Reduced means no step backtracks, including around the wrap.  Classes
    are canonicalized by least rotation and marked prime when the sequence
    is not a power of a shorter one.  Guarded to 2m <= 20 arcs and length
    <= 12; cost grows exponentially past that.
    """
    size = len(arcs)
    if size > MAX_ORACLE_ARCS:
        raise OracleSizeError(f"cycle oracle limited to {MAX_ORACLE_ARCS} arcs, got {size}")
    if order > MAX_ORACLE_ORDER:
        raise OracleSizeError(f"cycle oracle limited to length {MAX_ORACLE_ORDER}, got {order}")
    successors = [
        [f for f in range(size) if arcs.terminus(e) == arcs.origin(f) and f != arcs.inverse(e)]
        for e in range(size)
    ]
    seen: set[tuple[int, ...]] = set()
    path: list[int] = []

    def grow():
        last = path[-1]
        first = path[0]
        if arcs.terminus(last) == arcs.origin(first) and first != arcs.inverse(last):
            seen.add(_least_rotation(tuple(path)))
        if len(path) == order:
            return
        for nxt in successors[last]:
            path.append(nxt)
            grow()
            path.pop()

    for start in range(size):
        path = [start]
        grow()
    classes = [CycleClass(c, _is_primitive(c)) for c in sorted(seen)]
    return classes


def euler_product_oracle(arcs: ArcSet, order: int) -> PowerSeries:
    """Truncated Euler product over prime cycle classes up to the order."""
    series = PowerSeries.one(order)
    for cls in prime_cycle_classes(arcs, order):
        if not cls.prime:
            continue
        geometric = PowerSeries(
            (1 if k % cls.length == 0 else 0 for k in range(order + 1)), order
        )
        series = series * geometric
    return series


def cycle_norm(cycle: CycleClass, weights: Matrix, arcs: ArcSet) -> Fraction:
    """Product of the arc weights along the cycle."""
    norm = Fraction(1)
    for a in cycle.arcs:
        norm *= weights[arcs.origin(a), arcs.terminus(a)]
    return norm


def inverse_cycle_class(cycle: CycleClass, arcs: ArcSet) -> CycleClass:
    """The class of the reversed cycle (inverse arcs in opposite order)."""
    rev = tuple(arcs.inverse(a) for a in reversed(cycle.arcs))
    return CycleClass(_least_rotation(rev), cycle.prime)
