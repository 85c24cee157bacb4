"""Reduced rational functions and Padé reconstruction."""

from __future__ import annotations

from fractions import Fraction

from ..errors import InsufficientOrder, NotAPowerSeries
from .linalg import nullspace
from .poly import Poly, Scalar, poly_gcd
from .series import TruncatedSeries


class RationalFn:
    """``num / den`` in lowest terms.

    The denominator is scaled so that its lowest-order nonzero coefficient
    is 1; when ``den(0) != 0`` this means ``den(0) == 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Scalar, den: Poly | Scalar = 1):
        num = num if isinstance(num, Poly) else Poly([num])
        den = den if isinstance(den, Poly) else Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lowest()
            num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den == Poly([1]):
            return f"{self.num}"
        return f"({self.num})/({self.den})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.den)

    def __add__(self, other) -> RationalFn:
        other = _as_ratfn(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFn:
        return self + (-_as_ratfn(other))

    def __rsub__(self, other) -> RationalFn:
        return _as_ratfn(other) - self

    def __mul__(self, other) -> RationalFn:
        other = _as_ratfn(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        other = _as_ratfn(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFn:
        return _as_ratfn(other) / self

    def substitute_power(self, s: int) -> RationalFn:
        return RationalFn(self.num.substitute_power(s), self.den.substitute_power(s))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def series(self, order: int) -> TruncatedSeries:
        return series_of_rational(self, order)


def _as_ratfn(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RationalFn(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RationalFn")


def series_of_rational(r: RationalFn, order: int) -> TruncatedSeries:
    """Power-series expansion of ``r`` modulo ``z**order``."""
    num, den = r.num, r.den
    d0 = den[0]
    if not d0:
        raise NotAPowerSeries(f"{r} has a pole at z = 0")
    nz = [(i, c) for i, c in den.terms() if i]
    out = [Fraction(0)] * order
    for n in range(order):
        acc = num[n]
        for i, c in nz:
            if i > n:
                break
            acc -= c * out[n - i]
        out[n] = acc / d0
    return TruncatedSeries._trusted(out)


def pade(f: TruncatedSeries, p_deg: int, q_deg: int) -> RationalFn | None:
    """Rational ``p/q`` with ``deg p <= p_deg``, ``deg q <= q_deg`` and ``q f = p mod z^N``.

    Solves the homogeneous system in the coefficients of ``(p, q)`` over
    all ``N = f.order`` coefficient identities, reduces the chosen solution
    and re-checks it at full order. Returns None if nothing survives.
    """
    n = f.order
    if n < p_deg + q_deg + 2:
        raise InsufficientOrder(
            f"Padé bounds ({p_deg}, {q_deg}) need order >= {p_deg + q_deg + 2}, got {n}")
    ncols = p_deg + 1 + q_deg + 1
    zero = Fraction(0)
    minus_one = Fraction(-1)
    c = f.coeffs

    def rows():
        for m in range(n):
            row = [zero] * ncols
            if m <= p_deg:
                row[m] = minus_one
            for i in range(min(q_deg, m) + 1):
                row[p_deg + 1 + i] = c[m - i]
            yield row

    basis = nullspace(rows(), ncols)
    if not basis:
        return None

    def split(v):
        return Poly(v[:p_deg + 1]), Poly(v[p_deg + 1:])

    # prefer the smallest denominator, then the smallest numerator
    candidates = sorted((split(v) for v in basis), key=lambda pq: (pq[1].degree, pq[0].degree))
    for p, q in candidates:
        if q.is_zero():
            continue
        r = RationalFn(p, q)
        if not r.den[0]:
            continue
        if (TruncatedSeries.from_poly(r.den, n) * f) == TruncatedSeries.from_poly(r.num, n):
            return r
    return None
