"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def common_denominator(values: Iterable[Fraction]) -> int:
    den = 1
    for v in values:
        if v.denominator != 1:
            den = lcm(den, v.denominator)
    return den


def scaled_ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return ``(ints, den)`` with ``values[i] == ints[i] / den``."""
    den = common_denominator(values)
    if den == 1:
        return [v.numerator for v in values], 1
    return [v.numerator * (den // v.denominator) for v in values], den


def convolve(a: Sequence[Fraction], b: Sequence[Fraction], limit: int | None = None) -> list[Fraction]:
    """Exact product of coefficient lists, optionally truncated to ``limit`` terms.

    Works on integers scaled by a common denominator so that the inner loop
    never touches :class:`Fraction`.
    """
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
    if size <= 0:
        return []
    ia, da = scaled_ints(a)
    ib, db = scaled_ints(b)
    out = [0] * size
    nz_b = [(j, c) for j, c in enumerate(ib) if c]
    for i, x in enumerate(ia):
        if not x or i >= size:
            continue
        for j, y in nz_b:
            t = i + j
            if t >= size:
                break
            out[t] += x * y
    den = da * db
    if den == 1:
        return [Fraction(v) for v in out]
    return [Fraction(v, den) for v in out]


class Poly:
    """Immutable dense polynomial in ``z`` with :class:`Fraction` coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``; the highest stored
    coefficient is nonzero, and the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _trusted(cls, coeffs: list[Fraction]) -> Poly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        return p

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def z(cls) -> Poly:
        return cls([0, 1])

    # -- structure -------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def valuation(self) -> int | None:
        """Order of vanishing at 0; ``None`` for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def lowest(self) -> Fraction:
        v = self.valuation()
        return Fraction(0) if v is None else self.coeffs[v]

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing order."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly._trusted([-c for c in self.coeffs])

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._trusted(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._trusted(convolve(self.coeffs, other.coeffs))

    def __rmul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> Poly:
        c = Fraction(c)
        if not c:
            return Poly()
        return Poly._trusted([c * x for x in self.coeffs])

    def shift(self, n: int) -> Poly:
        """Multiply by ``z**n``."""
        if not self.coeffs:
            return self
        return Poly._trusted([Fraction(0)] * n + list(self.coeffs))

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) <= dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lead
            quot[i - dq] = q
            for j, b in enumerate(other.coeffs):
                if b:
                    rem[i - dq + j] -= q * b
        return Poly._trusted(quot), Poly._trusted(rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.coeffs[-1])

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(0)
        ints, den = scaled_ints(self.coeffs)
        g = 0
        for x in ints:
            g = gcd(g, x)
        return Fraction(g, den)

    def primitive(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.content())

    def derivative(self) -> Poly:
        return Poly._trusted([i * c for i, c in enumerate(self.coeffs)][1:])

    def substitute_power(self, s: int) -> Poly:
        """Return ``p(z**s)``."""
        if s < 1:
            raise ValueError("substitution power must be positive")
        if s == 1 or len(self.coeffs) <= 1:
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * s + 1)
        for i, c in enumerate(self.coeffs):
            out[i * s] = c
        return Poly._trusted(out)

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments, float otherwise."""
        exact = isinstance(x, (int, Fraction))
        acc = Fraction(0) if exact else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if exact else float(c))
        return acc

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)


def _as_poly(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    return None


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "z") -> str:
    """Human-readable form, lowest degree first: ``1 - z + 1/2*z^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in p.terms():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = _format_coeff(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{_format_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (Euclid over Q); ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, a % b
        if b:
            # keep remainders small
            b = b.primitive()
    return a.monic()


def poly_substitute_power(p: Poly, s: int) -> Poly:
    return p.substitute_power(s)
