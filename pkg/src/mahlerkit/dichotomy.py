"""Rationality certificates, D-finite guessing, and the rational/D-finite cross-check.

A Mahler series that is D-finite (in particular, algebraic) is rational.
This module turns that into something executable: it certifies rational
solutions exactly and reports D-finite evidence without a rational
reconstruction as a diagnostic, never as a counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .algebra import Poly, RationalFn, TruncatedSeries, nullspace, pade
from .errors import InsufficientOrder
from .mahler import MahlerEquation, verify


@dataclass(frozen=True)
class RationalCertificate:
    """``candidate = p/q`` solves the equation; ``identity_degree`` bounds the checked identity."""

    candidate: RationalFn
    identity_degree: int


@dataclass(frozen=True)
class OdeCandidate:
    """``sum_i coeffs[i](z) f^(i)(z) = 0 mod z^verified_order``."""

    coeffs: tuple[Poly, ...]
    verified_order: int

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Bounds:
    rational_deg: int
    ode_order: int
    ode_deg: int


@dataclass(frozen=True)
class Rational:
    certificate: RationalCertificate


@dataclass(frozen=True)
class NoRationalAtBounds:
    bounds: Bounds


@dataclass(frozen=True)
class DichotomyViolation:
    """A verified ODE without a rational reconstruction: more data or larger bounds are needed."""

    bounds: Bounds
    ode: OdeCandidate
    details: str = field(default="")


Classification = Union[Rational, NoRationalAtBounds, DichotomyViolation]


def certificate_identity(eq: MahlerEquation, r: RationalFn) -> tuple[Poly, int]:
    """Cleared-denominator identity ``sum_j a_j p(z^(k^j)) prod_{i != j} q(z^(k^i))``.

    Returns the resulting polynomial (zero iff ``r`` is an exact solution)
    and the largest degree among its summands.
    """
    k = eq.k
    ps = [r.num.substitute_power(k ** j) for j in range(eq.d + 1)]
    qs = [r.den.substitute_power(k ** j) for j in range(eq.d + 1)]
    total = Poly()
    top = 0
    for j, a in enumerate(eq.a):
        if a.is_zero() or ps[j].is_zero():
            continue
        term = a * ps[j]
        for i, q in enumerate(qs):
            if i != j:
                term = term * q
        top = max(top, int(term.degree))
        total = total + term
    return total, top


def rational_reconstruct(
    eq: MahlerEquation, f: TruncatedSeries, deg_bound: int
) -> RationalCertificate | None:
    """Padé-reconstruct ``f`` and prove the result solves ``eq`` exactly."""
    if f.order < 2 * deg_bound + 2:
        raise InsufficientOrder(f"degree bound {deg_bound} needs order >= {2 * deg_bound + 2}, got {f.order}")
    if not verify(eq, f):
        raise ValueError("series does not satisfy the equation")
    candidate = pade(f, deg_bound, deg_bound)
    if candidate is None:
        return None
    identity, degree = certificate_identity(eq, candidate)
    if not identity.is_zero():
        return None
    return RationalCertificate(candidate, degree)


def dfinite_order_needed(m_max: int, deg_max: int) -> int:
    return (m_max + 1) * (deg_max + 1) + 2 * deg_max + 8


def ode_residual(coeffs: tuple[Poly, ...], f: TruncatedSeries) -> TruncatedSeries:
    """``sum_i coeffs[i] f^(i)`` at the common order ``f.order - m``."""
    m = len(coeffs) - 1
    n = f.order - m
    total = TruncatedSeries.zero(n)
    deriv = f
    for p in coeffs:
        total = total + deriv.truncate(n).mul_poly(p)
        deriv = deriv.derivative()
    return total


def _ode_basis(derivs: list[TruncatedSeries], deg: int, n: int):
    ncols = len(derivs) * (deg + 1)
    zero = Fraction(0)

    def rows():
        for m in range(n):
            row = [zero] * ncols
            for i, g in enumerate(derivs):
                base = i * (deg + 1)
                for l in range(min(deg, m) + 1):
                    row[base + l] = g.coeffs[m - l]
            yield row

    return nullspace(rows(), ncols)


def dfinite_guess(f: TruncatedSeries, m_max: int, deg_max: int) -> OdeCandidate | None:
    """Search a linear ODE with polynomial coefficients, smallest (order, degree) first."""
    need = dfinite_order_needed(m_max, deg_max)
    if f.order < need:
        raise InsufficientOrder(f"ODE ansatz ({m_max}, {deg_max}) needs order >= {need}, got {f.order}")
    derivs = [f]
    for _ in range(m_max):
        derivs.append(derivs[-1].derivative())
    # the nullspace only grows with the ansatz, so the largest one filters quickly
    n_top = f.order - m_max
    if not _ode_basis([g.truncate(n_top) for g in derivs], deg_max, n_top):
        return None
    for m in range(m_max + 1):
        n = f.order - m
        trunc = [g.truncate(n) for g in derivs[:m + 1]]
        for deg in range(deg_max + 1):
            basis = _ode_basis(trunc, deg, n)
            for v in basis:
                coeffs = tuple(Poly(v[i * (deg + 1):(i + 1) * (deg + 1)]) for i in range(m + 1))
                if coeffs[-1].is_zero():
                    continue
                if ode_residual(coeffs, f).is_zero():
                    return OdeCandidate(coeffs, n)
    return None


def classify(eq: MahlerEquation, f: TruncatedSeries, bounds: Bounds) -> Classification:
    cert = rational_reconstruct(eq, f, bounds.rational_deg)
    if cert is not None:
        return Rational(cert)
    ode = dfinite_guess(f, bounds.ode_order, bounds.ode_deg)
    if ode is not None and ode_residual(ode.coeffs, f).is_zero():
        return DichotomyViolation(
            bounds, ode,
            "series looks D-finite but has no rational reconstruction at these bounds; "
            "increase the order or the degree bound")
    return NoRationalAtBounds(bounds)
