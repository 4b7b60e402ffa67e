"""Exact rational linear algebra: polynomials, matrices, determinants.

Everything here works over arbitrary-precision rationals
(``fractions.Fraction``), so determinants, characteristic polynomials and
polynomial divisions are exact.  Large determinants go through a
fraction-free Bareiss elimination on an integer lift of the matrix;
characteristic polynomials and determinants of polynomial matrices are
recovered by evaluating at small integer nodes and interpolating.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


class ExactDivisionError(ArithmeticError):
    """Polynomial division that was expected to be exact left a remainder."""

    def __init__(self, message: str, remainder: "Poly"):
        super().__init__(f"{message}; remainder {remainder!r}")
        self.remainder = remainder


class BoundTooSmallError(ValueError):
    """A caller-supplied degree bound was below the true degree."""


class Poly:
    """Univariate polynomial over the rationals.

    Coefficients are stored ascending (``coeffs[k]`` multiplies ``x**k``)
    with no trailing zeros.  The zero polynomial has an empty tuple and
    degree -1.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in items)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; works for Fraction, float or complex."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self * (Fraction(1) / lead)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact rational polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = Fraction(1) / other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem[: other.degree if other.degree > 0 else 0])

    def reversed_coeffs(self, size: int | None = None) -> tuple:
        """Coefficient tuple read back to front, padded to the given length."""
        width = (size if size is not None else self.degree) + 1
        if width < len(self.coeffs):
            raise ValueError("size below actual degree")
        padded = self.coeffs + (Fraction(0),) * (width - len(self.coeffs))
        return tuple(reversed(padded))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def format(self, var: str = "t") -> str:
        """Human-readable form like '1 - 2*t^3 + t^6'."""
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return None


def poly_divexact(p: Poly, q: Poly) -> Poly:
    """Divide p by q, raising ExactDivisionError if the remainder is nonzero."""
    quo, rem = p.divmod(q)
    if not rem.is_zero():
        raise ExactDivisionError("inexact polynomial division", rem)
    return quo


def _int_coeffs(p: Poly) -> list[int]:
    """Primitive integer coefficient list with positive leading coefficient."""
    scale = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    ints = [int(c * scale) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _int_primitive(ints: list[int]) -> list[int]:
    while ints and ints[-1] == 0:
        ints.pop()
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of primitive integer polynomials (b nonzero)."""
    rem = list(a)
    lead_b = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        lead_r = rem[-1]
        rem = [c * lead_b for c in rem]
        for j, v in enumerate(b):
            rem[shift + j] -= lead_r * v
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via a primitive remainder sequence."""
    if a.is_zero():
        return Poly() if b.is_zero() else b.monic()
    if b.is_zero():
        return a.monic()
    x, y = _int_coeffs(a), _int_coeffs(b)
    while y:
        x, y = y, _int_primitive(_int_pseudo_rem(x, y))
    return Poly(x).monic()


def square_free_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic square-free factors with multiplicities.

    Returns pairs (factor, multiplicity) with each factor monic, square free
    and pairwise coprime; the product of factor**multiplicity is p.monic().
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    out: list[tuple[Poly, int]] = []
    g = poly_gcd(p, p.derivative())
    c = poly_divexact(p, g)
    d = poly_divexact(p.derivative(), g) - c.derivative()
    i = 1
    while c.degree > 0:
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f, i))
        c = poly_divexact(c, f)
        d = poly_divexact(d, f) - c.derivative()
        i += 1
    return out


class RationalFunction:
    """Quotient of two polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        den = Poly.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Poly()
            self.den = Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        lead = den.leading()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_power(cls, base: Poly, exponent: int) -> "RationalFunction":
        """base**exponent as a rational function; the exponent may be negative."""
        if exponent >= 0:
            return cls(base**exponent)
        return cls(Poly.one(), base ** (-exponent))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(_as_poly(other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def is_polynomial(self) -> bool:
        return self.den == Poly.one()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator {self.den!r}")
        return self.num

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


class Matrix:
    """Dense matrix of Fractions, row major.

    Construction copies and normalizes every entry; treat instances as
    immutable afterwards.  Multiplication dispatches on the operand: matrix
    times matrix is the product, matrix times scalar is elementwise.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [[Fraction(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, data: Sequence[Sequence[str]]) -> "Matrix":
        return cls([[Fraction(s) for s in row] for row in data])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("inner dimensions do not match")
            cols = list(zip(*other.data))
            return Matrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self.data
                ]
            )
        if isinstance(other, (int, Fraction)):
            return Matrix([[x * other for x in row] for row in self.data])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.data))) if self.data else Matrix([])

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.data]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.data]

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("  ".join(str(x) for x in row) for row in self.data)


def _integer_lift(data) -> tuple[list[list[int]], list[int]]:
    """Scale each row to integers; returns (integer rows, per-row scales)."""
    lifted = []
    scales = []
    for row in data:
        scale = 1
        for x in row:
            d = x.denominator
            if d != 1:
                scale = lcm(scale, d)
        lifted.append([int(x * scale) for x in row])
        scales.append(scale)
    return lifted, scales


def _bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; mutates its input.

    Row and column swaps supply nonzero pivots, so the exact divisions of
    the Bareiss recurrence stay valid for singular leading minors.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = pc = -1
            for i in range(k, n):
                for j in range(k, n):
                    if a[i][j] != 0:
                        pr, pc = i, j
                        break
                if pr >= 0:
                    break
            if pr < 0:
                return 0
            if pr != k:
                a[k], a[pr] = a[pr], a[k]
                sign = -sign
            if pc != k:
                for row in a:
                    row[k], row[pc] = row[pc], row[k]
                sign = -sign
        piv = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            a[i] = rowi[: k + 1] + [
                (x * piv - aik * y) // prev
                for x, y in zip(rowi[k + 1 :], rowk[k + 1 :])
            ]
        prev = piv
    return sign * a[n - 1][n - 1]


def det_exact(m: Matrix) -> Fraction:
    """Exact determinant via Bareiss elimination on an integer lift."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    if m.rows == 0:
        return Fraction(1)
    lifted, scales = _integer_lift(m.data)
    det = _bareiss_det(lifted)
    scale = 1
    for s in scales:
        scale *= s
    return Fraction(det, scale)


def interpolate(points: Sequence[tuple]) -> Poly:
    """Unique polynomial through the given (x, y) points (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coefs = [Fraction(y) for _, y in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - level])
    poly = Poly.zero()
    basis = Poly.one()
    for i in range(n):
        poly = poly + coefs[i] * basis
        basis = basis * Poly((-xs[i], 1))
    return poly


def charpoly_exact(m: Matrix) -> Poly:
    """det(xI - M), monic of degree m.rows, by evaluation and interpolation.

    The matrix is lifted to integers once (per-row denominators), then the
    integer determinant of (cI - M) is taken at the nodes c = 0..rows and
    the results are interpolated.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    size = m.rows
    if size == 0:
        return Poly.one()
    lifted, scales = _integer_lift(m.data)
    scale = 1
    for s in scales:
        scale *= s
    negated = [[-x for x in row] for row in lifted]
    points = []
    for c in range(size + 1):
        work = [row[:] for row in negated]
        for i in range(size):
            work[i][i] += c * scales[i]
        points.append((c, Fraction(_bareiss_det(work), scale)))
    poly = interpolate(points)
    if poly.degree != size or poly.leading() != 1:
        raise AssertionError("interpolated characteristic polynomial is malformed")
    return poly


def polymat_det(entries: Sequence[Sequence[Poly]], degree_bound: int) -> Poly:
    """Determinant of a square matrix of polynomials.

    Evaluates the matrix at the integer nodes 0..degree_bound, interpolates,
    then checks one extra probe node.  A probe mismatch means the supplied
    bound was below the true degree and raises BoundTooSmallError.
    """
    n = len(entries)
    for row in entries:
        if len(row) != n:
            raise ValueError("polynomial matrix must be square")
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")

    def det_at(c: int) -> Fraction:
        point = Fraction(c)
        return det_exact(Matrix([[p(point) for p in row] for row in entries]))

    points = [(c, det_at(c)) for c in range(degree_bound + 1)]
    poly = interpolate(points)
    probe = degree_bound + 1
    if poly(Fraction(probe)) != det_at(probe):
        raise BoundTooSmallError(
            f"degree bound {degree_bound} too small for polynomial determinant"
        )
    return poly
