"""Structure decomposition ``F = H / prod_{j>=0} Gamma(z^(k^j))``.

``a_0 = rho * z^delta0 * Gamma`` with ``Gamma(0) = 1``. The infinite product
is exact modulo ``z^N`` once the factors with ``k^j >= N`` are dropped,
since each of those is congruent to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, TruncatedSeries
from .mahler import MahlerEquation, verify
from .regular import SequencePrefix, regular_rank


@dataclass(frozen=True)
class GammaData:
    rho: Fraction
    delta0: int
    gamma: Poly

    def reassemble(self) -> Poly:
        return self.gamma.shift(self.delta0).scale(self.rho)


@dataclass(frozen=True)
class Decomposition:
    gamma_data: GammaData
    product: TruncatedSeries
    h: TruncatedSeries
    h_rank_evidence: int
    """Q-rank of the k-kernel of H's coefficients at ``rank_depth``; evidence only."""
    rank_depth: int


def gamma_of(eq: MahlerEquation) -> GammaData:
    a0 = eq.a[0]
    delta0 = a0.valuation()
    rho = a0[delta0]
    gamma = Poly(a0.coeffs[delta0:]).scale(1 / rho)
    return GammaData(rho, delta0, gamma)


def product_truncation(g: GammaData | Poly, k: int, order: int) -> TruncatedSeries:
    """``prod_{j : k^j < order} Gamma(z^(k^j))`` modulo ``z^order``."""
    gamma = g.gamma if isinstance(g, GammaData) else g
    if gamma[0] != 1:
        raise ValueError("Gamma(0) must be 1")
    result = TruncatedSeries.from_poly(Poly([1]), order)
    step = 1
    while step < order:
        result = result.mul_poly(gamma.substitute_power(step))
        step *= k
    return result


def _rank_depth(k: int, order: int) -> int:
    if order < 8 * k:
        return 0
    return max(0, min(4, int(math.floor(math.log(order / 8, k) + 1e-12))))


def decompose(eq: MahlerEquation, f: TruncatedSeries) -> Decomposition:
    if not verify(eq, f):
        raise ValueError("series does not satisfy the equation")
    gd = gamma_of(eq)
    prod = product_truncation(gd, eq.k, f.order)
    h = f * prod
    depth = _rank_depth(eq.k, f.order)
    cmp_len = f.order // eq.k ** depth
    rank = regular_rank(SequencePrefix(h.coeffs, eq.k), depth, cmp_len) if f.order else 0
    return Decomposition(gd, prod, h, rank, depth)
