import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahlerkit.algebra import Poly, RationalFn, TruncatedSeries, series_of_rational
from mahlerkit.analytic import (
    DiskPoint,
    MAX_RADIUS,
    OrbitTree,
    boundary_report,
    eval_disk,
    grid_angles,
    poles_of,
    radial_profile,
    rational_roots,
    singular_orbit,
)
from mahlerkit.mahler import MahlerEquation
from mahlerkit.regular import thue_morse_prefix

TM = MahlerEquation.from_lists(2, [[1], [-1, 1]])
GEO = MahlerEquation.from_lists(2, [[-1, 1], [1, 0, -1]])


def geometric(n):
    return TruncatedSeries([1] * n)


def tm_product(z, terms=40):
    out = 1
    for j in range(terms):
        out *= 1 - z ** (2 ** j)
    return out


class TestEval:
    def test_geometric(self):
        ev = eval_disk(geometric(64), DiskPoint(0.5, 0))
        assert abs(ev.value - 2) <= ev.tail_bound + 1e-15 and ev.tail_bound < 2 ** -60
        ev = eval_disk(geometric(2048), DiskPoint(0.99, 0))
        assert abs(ev.value - 100) < 1e-6

    def test_thue_morse_product(self):
        ev = eval_disk(TruncatedSeries(thue_morse_prefix(4096)), DiskPoint(0.9, 0))
        assert abs(ev.value - tm_product(0.9)) < 1e-8

    def test_point_checks(self):
        with pytest.raises(ValueError):
            DiskPoint(1.0, 0)
        with pytest.raises(ValueError):
            eval_disk(geometric(4), DiskPoint(0.5, 0))

    @given(st.floats(0, 0.9), st.floats(0, 2 * math.pi),
           st.lists(st.integers(-3, 3), min_size=1, max_size=3),
           st.lists(st.integers(-1, 1), max_size=2))
    def test_rational_agreement(self, r, theta, num, den_tail):
        den = Poly([2] + den_tail)  # roots outside the closed unit disk
        rf = RationalFn(Poly(num), den)
        f = series_of_rational(rf, 256)
        ev = eval_disk(f, DiskPoint(r, theta))
        z = r * cmath.exp(1j * theta)
        exact = Poly(num)(z) / den(z)
        assert abs(ev.value - exact) <= ev.tail_bound + 1e-9


class TestOrbit:
    def test_halving(self):
        o = singular_orbit(2 * math.pi, 2, 1, 5)
        expected = [2 * math.pi / 2 ** n for n in range(6)]
        assert all(abs(a - b) < 1e-15 for a, b in zip(o.angles, expected))

    def test_fixed_branch(self):
        o = singular_orbit(2 * math.pi, 2, 2, 4, j=1)
        assert all(abs(b - a / 2) <= 1e-12 * a for a, b in zip(o.angles, o.angles[1:]))

    def test_limit(self):
        o = singular_orbit(2 * math.pi, 2, 1, 60)
        assert abs(cmath.exp(1j * o.angles[-1]) - 1) < 1e-15

    @given(st.floats(0.01, 2 * math.pi), st.integers(2, 4), st.integers(1, 3), st.integers(0, 2))
    def test_recurrence(self, theta, k, d, j):
        j = j % d
        o = singular_orbit(theta, k, d, 12, j=j)
        for a, b in zip(o.angles, o.angles[1:]):
            assert abs(b - a * k ** (j - d)) <= 1e-12 * a
            assert b < a

    def test_tree_width(self):
        tree = singular_orbit(2 * math.pi, 2, 3, 6, j=None)
        assert isinstance(tree, OrbitTree) and tree.truncated
        assert all(len(level) <= 64 for level in tree.levels)
        for prev, level in zip(tree.levels, tree.levels[1:]):
            for node in level:
                assert abs(node.angle - prev[node.parent].angle * 2.0 ** (node.j - 3)) < 1e-15

    def test_bad_start(self):
        with pytest.raises(ValueError):
            singular_orbit(0.0, 2, 1, 3)


class TestProfiles:
    def test_geometric(self):
        rows = radial_profile(geometric(4096), 0, [0.5, 0.9, 0.99])
        assert [round(r.abs_value, 6) for r in rows] == [2, 10, 100]
        rows = radial_profile(geometric(4096), math.pi, [0.5, 0.9, 0.99])
        assert all(abs(r.abs_value - 1 / (1 + r.r)) < 1e-9 for r in rows)

    def test_thue_morse(self):
        rows = radial_profile(TruncatedSeries(thue_morse_prefix(4096)), 0, [0.5, 0.9, 0.99])
        values = [r.abs_value for r in rows]
        assert values == sorted(values, reverse=True)
        assert all(abs(r.abs_value - abs(tm_product(r.r, 60))) < 1e-9 for r in rows)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
    def test_polynomial_bounded(self, coeffs):
        f = TruncatedSeries(coeffs + [0] * 16)
        bound = sum(abs(c) for c in coeffs)
        rows = radial_profile(f, 1.0, [0.1, 0.5, 0.9, MAX_RADIUS])
        assert all(r.abs_value <= bound + 1e-9 for r in rows)


class TestReport:
    def test_rational(self):
        rep = boundary_report(GEO, geometric(64), 3)
        assert rep.verdict == "rational"
        assert [p.exact for p in rep.poles] == [1]

    def test_thue_morse(self):
        rep = boundary_report(TM, TruncatedSeries(thue_morse_prefix(512)), 4)
        assert rep.verdict == "no-rational-at-bounds"
        assert len(rep.profiles) == 16 and len(rep.orbits) == 16
        assert [rows[0].theta for rows in rep.profiles] == grid_angles(2, 4)

    def test_zero(self):
        rep = boundary_report(TM, TruncatedSeries.zero(64), 3)
        assert rep.verdict == "zero" and not rep.profiles and not rep.poles

    def test_roots(self):
        assert rational_roots(Poly([0, -1, 0, 1])) == [-1, 0, 1]
        poles = poles_of(Poly([1, 0, 1]))
        assert len(poles) == 2 and all(p.exact is None and abs(abs(p.value) - 1) < 1e-12 for p in poles)
