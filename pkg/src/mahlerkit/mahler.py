"""Mahler functional equations ``sum_j a_j(z) F(z^(k^j)) = 0``.

Solutions are handled as truncated power series. The central routine,
:func:`solution_space`, inverts the equation coefficient by coefficient:
writing ``a_0 = rho * z^delta0 * Gamma`` the identity at ``z^(n + delta0)``
contains ``rho * f(n)`` and otherwise only coefficients ``f(m)`` with
``m < n`` as soon as ``n >= B = delta0 // (k - 1) + 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .algebra import (
    Poly,
    RationalFn,
    RowEchelon,
    TruncatedSeries,
    nullspace,
    primitive_vector,
    rref_vectors,
)
from .algebra.poly import Scalar, format_poly
from .errors import AmbiguousPrefix, InconsistentPrefix, InsufficientOrder

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MahlerEquation:
    """``a[0](z) F(z) + a[1](z) F(z^k) + ... + a[d](z) F(z^(k^d)) = 0``."""

    k: int
    a: tuple[Poly, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("radix k must be at least 2")
        a = tuple(p if isinstance(p, Poly) else Poly(p) for p in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise ValueError("an equation needs at least one coefficient")
        if a[0].is_zero() or a[-1].is_zero():
            raise ValueError("a_0 and a_d must be nonzero")

    @classmethod
    def from_lists(cls, k: int, coeffs: Sequence[Sequence[Scalar]]) -> MahlerEquation:
        return cls(k, tuple(Poly(c) for c in coeffs))

    @property
    def d(self) -> int:
        return len(self.a) - 1

    @property
    def delta0(self) -> int:
        return self.a[0].valuation()

    @property
    def rho(self) -> Fraction:
        return self.a[0][self.delta0]

    @property
    def max_degree(self) -> int:
        return max(int(p.degree) for p in self.a if p)

    @property
    def prefix_bound(self) -> int:
        """Number of initial coefficients that the recursion leaves free."""
        return self.delta0 // (self.k - 1) + 1

    def normalized(self) -> MahlerEquation:
        """Integer-primitive coefficients with the lowest coefficient of ``a_0`` positive."""
        flat = [c for p in self.a for c in p.coeffs]
        content = Poly(flat).content()
        sign = 1 if self.rho > 0 else -1
        scale = sign / content
        return MahlerEquation(self.k, tuple(p.scale(scale) for p in self.a))

    def __str__(self) -> str:
        parts = []
        for j, p in enumerate(self.a):
            if p.is_zero():
                continue
            arg = "z" if j == 0 else f"z^{self.k ** j}"
            parts.append(f"({format_poly(p)})*F({arg})")
        return " + ".join(parts) + " = 0"


def _terms(eq: MahlerEquation) -> list[tuple[int, list[tuple[int, Fraction]]]]:
    """``(k^j, nonzero terms of a_j)`` for each j."""
    return [(eq.k ** j, p.terms()) for j, p in enumerate(eq.a)]


def _identity(terms, m: int):
    """Contributions ``(coefficient, index)`` of ``f(index)`` to the residual at ``z^m``."""
    out = []
    for kj, poly_terms in terms:
        for i, c in poly_terms:
            t = m - i
            if t < 0:
                break
            if t % kj == 0:
                out.append((c, t // kj))
    return out


# -- residual and verification -------------------------------------------


def residual(eq: MahlerEquation, f: TruncatedSeries) -> TruncatedSeries:
    """``sum_j a_j(z) f(z^(k^j))`` modulo ``z^f.order``."""
    total = TruncatedSeries.zero(f.order)
    for j, p in enumerate(eq.a):
        if p:
            total = total + f.substitute_power(eq.k ** j).mul_poly(p)
    return total


@dataclass(frozen=True)
class Verification:
    ok: bool
    first_failure: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify(eq: MahlerEquation, f: TruncatedSeries) -> Verification:
    """Pass iff the residual vanishes; otherwise report the first nonzero index."""
    idx = residual(eq, f).valuation()
    return Verification(True) if idx is None else Verification(False, idx)


# -- solving ---------------------------------------------------------------


def solution_space(eq: MahlerEquation, order: int) -> list[TruncatedSeries]:
    """Basis of ``{f mod z^order : residual(eq, f) = 0 mod z^order}``.

    Free unknowns are the first ``B`` coefficients plus the last ``delta0``
    ones (their determining identities lie beyond ``z^order``). Every other
    coefficient is an explicit linear form in the unknowns; the identities
    not used for determination become constraints. The basis is returned in
    reduced echelon form, so e.g. a one-dimensional space with ``f(0) != 0``
    is returned with ``f(0) = 1``.
    """
    if order < 1:
        raise ValueError("order must be positive")
    delta0, rho, bound = eq.delta0, eq.rho, eq.prefix_bound
    terms = _terms(eq)
    tail = order - delta0

    free_index: dict[int, int] = {}
    for n in range(order):
        if n < bound or n >= tail:
            free_index[n] = len(free_index)
    nfree = len(free_index)
    zero = Fraction(0)

    forms: list[list[Fraction]] = []
    used: set[int] = set()
    for n in range(order):
        if n in free_index:
            v = [zero] * nfree
            v[free_index[n]] = Fraction(1)
            forms.append(v)
            continue
        m = n + delta0
        used.add(m)
        acc = [zero] * nfree
        for c, idx in _identity(terms, m):
            if idx == n:
                continue  # the pivot rho * f(n)
            src = forms[idx]
            for t, x in enumerate(src):
                if x:
                    acc[t] += c * x
        inv = -1 / rho
        forms.append([x * inv for x in acc])

    def constraint_rows():
        for m in range(order):
            if m in used:
                continue
            row = [zero] * nfree
            for c, idx in _identity(terms, m):
                for t, x in enumerate(forms[idx]):
                    if x:
                        row[t] += c * x
            yield row

    kernel = nullspace(constraint_rows(), nfree)
    vectors = []
    for x in kernel:
        vectors.append([sum((a * b for a, b in zip(form, x) if a), zero) for form in forms])
    return [TruncatedSeries._trusted(v) for v in rref_vectors(vectors)]


def expand(eq: MahlerEquation, prefix: Sequence[Scalar], order: int) -> TruncatedSeries:
    """The power-series solution with the given initial coefficients, to ``order``.

    Coefficients past the prefix come from the recursion; identities that
    only involve prefix coefficients are checked and raise
    :class:`InconsistentPrefix` when violated.
    """
    bound = eq.prefix_bound
    if len(prefix) < bound:
        raise AmbiguousPrefix(f"need at least {bound} initial coefficients, got {len(prefix)}")
    delta0, rho = eq.delta0, eq.rho
    terms = _terms(eq)
    values = [Fraction(x) for x in prefix]
    length = len(values)
    for m in range(length + delta0):
        acc = Fraction(0)
        for c, idx in _identity(terms, m):
            acc += c * values[idx]
        if acc:
            raise InconsistentPrefix(m)
    inv = -1 / rho
    for n in range(length, order):
        acc = Fraction(0)
        for c, idx in _identity(terms, n + delta0):
            if idx != n:
                acc += c * values[idx]
        values.append(acc * inv)
    return TruncatedSeries(values[:order], order)


def principal_solution(eq: MahlerEquation, order: int) -> TruncatedSeries | None:
    """First nonzero basis element of the genuine solutions, or None.

    The space is computed ``delta0`` coefficients further out and then
    truncated, which discards the free tail coefficients.
    """
    space = solution_space(eq, order + eq.delta0)
    truncated = rref_vectors([f.coeffs[:order] for f in space])
    for v in truncated:
        if any(v):
            return TruncatedSeries._trusted(v)
    return None


@dataclass(frozen=True)
class RadiusBound:
    radius: float
    witness_root: complex | None
    """Root of ``a_0 / z^delta0`` attaining the bound, or None when the bound is 1."""
    polynomial: Poly

    def describe(self) -> str:
        if self.witness_root is None:
            return f"r = 1 (no root of {format_poly(self.polynomial)} inside the unit disk)"
        return f"r = {self.radius:.12g} attained at root {self.witness_root:.12g} of {format_poly(self.polynomial)}"


def convergence_radius_bound(eq: MahlerEquation) -> RadiusBound:
    """Lower bound ``min(1, |alpha|)`` over the nonzero roots ``alpha`` of ``a_0``."""
    a0 = eq.a[0]
    core = Poly(a0.coeffs[eq.delta0:])
    witness = None
    radius = 1.0
    if core.degree > 0:
        roots = np.roots([float(c) for c in reversed(core.coeffs)])
        i = int(np.argmin(np.abs(roots)))
        if abs(roots[i]) < 1.0:
            radius = float(abs(roots[i]))
            witness = complex(roots[i])
    return RadiusBound(radius, witness, core)


# -- guessing --------------------------------------------------------------


def guess_order_needed(d_max: int, deg_max: int) -> int:
    return (d_max + 1) * (deg_max + 1) + 2 * deg_max + 8


def _ansatz_basis(spread: list[TruncatedSeries], deg: int, order: int) -> list[list[Fraction]]:
    d1 = len(spread)
    ncols = d1 * (deg + 1)
    zero = Fraction(0)

    def rows():
        for m in range(order):
            row = [zero] * ncols
            for j, g in enumerate(spread):
                base = j * (deg + 1)
                for i in range(min(deg, m) + 1):
                    row[base + i] = g.coeffs[m - i]
            yield row

    return nullspace(rows(), ncols)


def _candidate_vectors(basis: list[list[Fraction]]):
    yield from basis
    if len(basis) > 1:
        total = [sum(col, Fraction(0)) for col in zip(*basis)]
        yield total
        for a, b in combinations(range(len(basis)), 2):
            yield [x + 2 * y for x, y in zip(basis[a], basis[b])]


def guess_equation(
    f: TruncatedSeries, k: int, d_max: int, deg_max: int, d_min: int = 1
) -> MahlerEquation | None:
    """Find a Mahler equation of order ``<= d_max`` and degree ``<= deg_max`` for ``f``.

    Ansätze are tried with the order ascending, then the degree ascending;
    the first nullspace vector with ``a_0 a_d != 0`` that verifies at full
    order wins.
    """
    need = guess_order_needed(d_max, deg_max)
    if f.order < need:
        raise InsufficientOrder(f"guessing at ({d_max}, {deg_max}) needs order >= {need}, got {f.order}")
    n = f.order
    for d in range(max(d_min, 0), d_max + 1):
        spread = [f.substitute_power(k ** j) for j in range(d + 1)]
        if not _ansatz_basis(spread, deg_max, n):
            continue
        for deg in range(deg_max + 1):
            basis = _ansatz_basis(spread, deg, n)
            if not basis:
                continue
            ordered = sorted(basis, key=lambda v: _degree_key(v, d, deg))
            for v in _candidate_vectors(ordered):
                polys = [Poly(v[j * (deg + 1):(j + 1) * (deg + 1)]) for j in range(d + 1)]
                if polys[0].is_zero() or polys[-1].is_zero():
                    continue
                eq = MahlerEquation(k, tuple(polys)).normalized()
                if verify(eq, f):
                    return eq
    return None


def _degree_key(v, d, deg):
    return tuple(Poly(v[j * (deg + 1):(j + 1) * (deg + 1)]).degree for j in range(d, -1, -1))


# -- order reduction -------------------------------------------------------


def reduce_relation(minimal: MahlerEquation, rel: Sequence[RationalFn | Poly | Scalar]) -> list[RationalFn]:
    """Rewrite ``sum_i rel[i] F(z^(k^i))`` with indices below ``minimal.d``.

    The top term is eliminated with the minimal equation taken at
    ``z -> z^(k^(i-d))``, repeatedly, until only ``d`` coefficients remain.
    The result equals the input functional on every solution of ``minimal``.
    """
    d, k = minimal.d, minimal.k
    q = [c if isinstance(c, RationalFn) else RationalFn(c) for c in rel]
    if len(q) <= d:
        return q
    for i in range(len(q) - 1, d - 1, -1):
        top = q[i]
        if top.is_zero():
            continue
        s = k ** (i - d)
        lead = RationalFn(minimal.a[d].substitute_power(s))
        for j in range(d):
            coeff = RationalFn(minimal.a[j].substitute_power(s))
            q[i - d + j] = q[i - d + j] - top * coeff / lead
        q[i] = RationalFn(0)
    return q[:d]


def relation_residual(
    k: int, coeffs: Sequence[RationalFn], f: TruncatedSeries
) -> TruncatedSeries:
    """``L * sum_i coeffs[i] f(z^(k^i))`` mod ``z^N`` with ``L`` the lcm of the denominators."""
    from .algebra.poly import poly_gcd

    lcm = Poly([1])
    for c in coeffs:
        g = poly_gcd(lcm, c.den)
        lcm = lcm * c.den.exact_div(g)
    total = TruncatedSeries.zero(f.order)
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        poly = c.num * lcm.exact_div(c.den)
        total = total + f.substitute_power(k ** i).mul_poly(poly)
    return total


def minimize(eq: MahlerEquation, order: int) -> MahlerEquation:
    """Smallest-order equation found by guessing on a solution of ``eq``.

    Degrees follow a doubling schedule from ``eq``'s maximal degree up to
    eight times that. This certifies minimality only at these bounds.
    """
    if eq.d == 0:
        return eq
    f = principal_solution(eq, order)
    if f is None:
        raise InsufficientOrder("the equation has no nonzero solution at this order")
    base = max(eq.max_degree, 1)
    schedule = [base * 2 ** i for i in range(4)]
    feasible = [deg for deg in schedule if guess_order_needed(eq.d - 1, deg) <= order]
    if not feasible:
        raise InsufficientOrder(
            f"order {order} is too small for degree {base} (need {guess_order_needed(eq.d - 1, base)})")
    for d in range(1, eq.d):
        for deg in feasible:
            found = guess_equation(f, eq.k, d, deg, d_min=d)
            if found is not None:
                return found
    return eq
