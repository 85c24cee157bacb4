"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Poly, Scalar, convolve


class TruncatedSeries:
    """A power series known modulo ``z**order``.

    Coefficients are stored densely; ``len(coeffs) == order`` always holds,
    and no operation produces a coefficient at or beyond ``order``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[:order] + [Fraction(0)] * max(0, order - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def _trusted(cls, coeffs: list[Fraction]) -> TruncatedSeries:
        s = object.__new__(cls)
        object.__setattr__(s, "coeffs", tuple(coeffs))
        return s

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls._trusted([Fraction(0)] * order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> TruncatedSeries:
        return cls(p.coeffs, order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries._trusted(list(self.coeffs[:order]))

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def _common(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._trusted([-c for c in self.coeffs])

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, Poly):
            other = TruncatedSeries.from_poly(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return TruncatedSeries._trusted([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        if isinstance(other, Poly):
            other = TruncatedSeries.from_poly(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return TruncatedSeries._trusted([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def scale(self, c: Scalar) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries._trusted([c * x for x in self.coeffs])

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            return self.mul_poly(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        out = convolve(self.coeffs[:n], other.coeffs[:n], limit=n)
        return TruncatedSeries(out, n)

    def __rmul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction, Poly)):
            return self * other
        return NotImplemented

    def mul_poly(self, p: Poly) -> TruncatedSeries:
        """Product with a polynomial; cost is proportional to its number of terms."""
        n = self.order
        out = [Fraction(0)] * n
        src = self.coeffs
        for i, c in p.terms():
            if i >= n:
                break
            for t in range(n - i):
                x = src[t]
                if x:
                    out[t + i] += c * x
        return TruncatedSeries._trusted(out)

    def substitute_power(self, s: int) -> TruncatedSeries:
        """``f(z**s)`` to the same order: index ``i`` holds ``f[i/s]`` when ``s | i``."""
        if s < 1:
            raise ValueError("substitution power must be positive")
        if s == 1:
            return self
        n = self.order
        out = [Fraction(0)] * n
        for i in range(0, (n + s - 1) // s):
            out[i * s] = self.coeffs[i]
        return TruncatedSeries._trusted(out)

    def derivative(self) -> TruncatedSeries:
        """Termwise derivative; the order drops by one."""
        return TruncatedSeries._trusted([i * c for i, c in enumerate(self.coeffs)][1:])

    def inverse(self) -> TruncatedSeries:
        if not self.order:
            return self
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c and i]
        out = [Fraction(0)] * n
        out[0] = 1 / c0
        for m in range(1, n):
            acc = Fraction(0)
            for i, c in nz:
                if i > m:
                    break
                acc += c * out[m - i]
            out[m] = -acc / c0
        return TruncatedSeries._trusted(out)

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if isinstance(other, Poly):
            other = TruncatedSeries.from_poly(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def evaluate(self, x):
        """Horner evaluation of the truncated polynomial (float/complex ``x``)."""
        exact = isinstance(x, (int, Fraction))
        acc = Fraction(0) if exact else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if exact else float(c))
        return acc


def series_substitute_power(f: TruncatedSeries, s: int) -> TruncatedSeries:
    return f.substitute_power(s)


def series_from_values(values: Sequence[Scalar]) -> TruncatedSeries:
    return TruncatedSeries(values, len(values))
