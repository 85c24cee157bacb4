"""Floating-point probes of a Mahler series inside the unit disk.

Nothing here proves anything about analytic continuation: evaluations
carry a heuristic tail estimate, and singularity orbits are predictions
to compare against radial data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import Poly, TruncatedSeries
from .dichotomy import Bounds, Classification, DichotomyViolation, Rational, classify
from .mahler import MahlerEquation

TWO_PI = 2 * math.pi
MAX_RADIUS = 1 - 2 ** -10
ORBIT_WIDTH = 64
RELIABLE_TAIL = 0.1
MAX_DIVISOR_SEARCH = 10 ** 6


@dataclass(frozen=True)
class DiskPoint:
    r: float
    theta: float

    def __post_init__(self):
        if not 0 <= self.r < 1:
            raise ValueError("modulus must lie in [0, 1)")

    @property
    def z(self) -> complex:
        return self.r * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class Evaluation:
    value: complex
    tail_bound: float
    rounding_bound: float = 0.0
    """A priori floating-point error of the Horner sum itself."""


def tail_bound(f: TruncatedSeries, r: float) -> float:
    """``C r^N / (1 - r)`` with ``C`` the largest |coefficient| in the last quarter."""
    n = f.order
    start = n - max(1, n // 4)
    c = max((abs(float(x)) for x in f.coeffs[start:]), default=0.0)
    return c * r ** n / (1 - r)


def eval_disk(f: TruncatedSeries, p: DiskPoint) -> Evaluation:
    if f.order < 8:
        raise ValueError("need at least 8 coefficients")
    z = p.z
    acc = 0j
    absum = 0.0
    for c in reversed(f.coeffs):
        x = float(c)
        acc = acc * z + x
        absum = absum * p.r + abs(x)
    # gamma_(4n) * sum |c_i| r^i covers complex multiply-add rounding
    u = 2.0 ** -53
    n = 4 * f.order
    return Evaluation(acc, tail_bound(f, p.r), n * u / (1 - n * u) * absum)


# -- singular orbits -----------------------------------------------------


@dataclass(frozen=True)
class SingularOrbit:
    """Angles ``theta_(n+1) = theta_n * k^(j_n - d)`` with ``0 <= j_n < d``."""

    angles: tuple[float, ...]
    k: int
    d: int
    j_choices: tuple[int, ...]


@dataclass(frozen=True)
class OrbitNode:
    angle: float
    parent: int | None
    j: int | None


@dataclass(frozen=True)
class OrbitTree:
    """Levels of nodes; ``parent`` indexes into the previous level."""

    k: int
    d: int
    levels: tuple[tuple[OrbitNode, ...], ...]
    truncated: bool = False


def singular_orbit(theta0: float, k: int, d: int, steps: int, j: int | None = 0,
                   width: int = ORBIT_WIDTH) -> SingularOrbit | OrbitTree:
    """Orbit for a fixed ``j``, or the tree of all ``j`` choices when ``j`` is None."""
    if not 0 < theta0 <= TWO_PI:
        raise ValueError("theta0 must lie in (0, 2*pi]")
    if d < 1:
        raise ValueError("orbits need d >= 1")
    if j is not None:
        if not 0 <= j < d:
            raise ValueError("j must lie in [0, d)")
        factor = float(k) ** (j - d)
        angles = [theta0]
        for _ in range(steps):
            angles.append(angles[-1] * factor)
        return SingularOrbit(tuple(angles), k, d, (j,) * steps)
    levels = [(OrbitNode(theta0, None, None),)]
    truncated = False
    for _ in range(steps):
        nxt = []
        for idx, node in enumerate(levels[-1]):
            for jj in range(d):
                if len(nxt) >= width:
                    truncated = True
                    break
                nxt.append(OrbitNode(node.angle * float(k) ** (jj - d), idx, jj))
        levels.append(tuple(nxt))
    return OrbitTree(k, d, tuple(levels), truncated)


# -- radial profiles -----------------------------------------------------


@dataclass(frozen=True)
class ProfileRow:
    theta: float
    r: float
    abs_value: float
    tail_bound: float
    flagged: bool


def radial_profile(f: TruncatedSeries, theta: float, radii: Sequence[float]) -> list[ProfileRow]:
    """``|f(r e^(i theta))|`` along increasing radii; rows with a large tail are flagged."""
    rows = []
    for r in sorted(radii):
        if not 0 <= r < 1:
            raise ValueError("radii must lie in [0, 1)")
        r = min(r, MAX_RADIUS)
        ev = eval_disk(f, DiskPoint(r, theta))
        mag = abs(ev.value)
        rows.append(ProfileRow(theta, r, mag, ev.tail_bound, ev.tail_bound > RELIABLE_TAIL * mag))
    return rows


def default_radii() -> list[float]:
    return [0.5, 0.75, 0.9, 0.95, 0.99, MAX_RADIUS]


# -- reports --------------------------------------------------------------


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots by the rational root test."""
    if p.degree < 1:
        return []
    v = p.valuation()
    roots = [Fraction(0)] if v else []
    core = Poly(p.coeffs[v:]).primitive()
    a0, an = abs(int(core[0])), abs(int(core.leading()))
    if max(a0, an) > MAX_DIVISOR_SEARCH:
        return roots

    def divisors(n):
        return [x for x in range(1, n + 1) if n % x == 0]

    for num in divisors(a0):
        for den in divisors(an):
            for sign in (1, -1):
                x = Fraction(sign * num, den)
                if x not in roots and not core(x):
                    roots.append(x)
    return sorted(roots)


@dataclass(frozen=True)
class Pole:
    value: complex
    exact: Fraction | None


@dataclass
class BoundaryReport:
    verdict: str
    poles: list[Pole] = field(default_factory=list)
    profiles: list[list[ProfileRow]] = field(default_factory=list)
    orbits: list[OrbitTree] = field(default_factory=list)


def poles_of(den: Poly) -> list[Pole]:
    poles = [Pole(complex(x), x) for x in rational_roots(den)]
    rest = den
    for p in poles:
        factor = Poly([-p.exact, 1])
        while True:
            q, r = rest.divmod(factor)
            if r:
                break
            rest = q
    if rest.degree > 0:
        for z in np.roots([float(c) for c in reversed(rest.coeffs)]):
            poles.append(Pole(complex(z), None))
    return poles


def grid_angles(k: int, m: int) -> list[float]:
    """``2 pi p / k^m`` for ``p = 1..k^m``, so that every angle lies in ``(0, 2 pi]``."""
    n = k ** m
    return [TWO_PI * p / n for p in range(1, n + 1)]


def boundary_report(
    eq: MahlerEquation,
    f: TruncatedSeries,
    grid_m: int,
    classification: Classification | None = None,
    bounds: Bounds | None = None,
    radii: Sequence[float] | None = None,
    orbit_steps: int = 6,
) -> BoundaryReport:
    """Poles for certified rational inputs, otherwise profiles and orbits on the k^m root-of-unity grid."""
    if f.is_zero():
        return BoundaryReport("zero")
    if classification is None:
        if bounds is None:
            deg = max(0, min(16, (f.order - 2) // 2))
            bounds = Bounds(deg, 2, 4)
        classification = classify(eq, f, bounds)
    if isinstance(classification, Rational):
        return BoundaryReport("rational", poles=poles_of(classification.certificate.candidate.den))
    radii = list(radii) if radii is not None else default_radii()
    verdict = "dichotomy-violation" if isinstance(classification, DichotomyViolation) else "no-rational-at-bounds"
    report = BoundaryReport(verdict)
    for theta in grid_angles(eq.k, grid_m):
        report.profiles.append(radial_profile(f, theta, radii))
        if eq.d >= 1:
            report.orbits.append(singular_orbit(theta, eq.k, eq.d, orbit_steps, j=None))
    return report
