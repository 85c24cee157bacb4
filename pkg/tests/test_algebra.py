from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahlerkit.algebra import (
    Poly,
    RatMatrix,
    RationalFn,
    TruncatedSeries,
    nullspace,
    pade,
    poly_gcd,
    poly_substitute_power,
    rank,
    series_of_rational,
    series_substitute_power,
)
from mahlerkit.errors import InsufficientOrder, NotAPowerSeries
from mahlerkit.regular import thue_morse_prefix

import oracles

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
polys = st.lists(st.integers(-5, 5), max_size=6).map(Poly)


def geometric(n):
    return TruncatedSeries([1] * n)


class TestPoly:
    def test_zero_has_negative_infinite_degree(self):
        assert Poly().degree < 0
        assert Poly([0, 0]).coeffs == ()

    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]).degree == 1

    def test_substitute_examples(self):
        assert poly_substitute_power(Poly([1, -1]), 2) == Poly([1, 0, -1])
        p = Poly([3, 0, 2])
        assert poly_substitute_power(p, 1) == p
        assert poly_substitute_power(Poly([1, 2, 1]), 3) == Poly([1, 0, 0, 2, 0, 0, 1])

    @given(polys, st.integers(1, 4), st.integers(1, 4))
    def test_substitute_composes(self, p, s, t):
        assert poly_substitute_power(poly_substitute_power(p, s), t) == poly_substitute_power(p, s * t)

    @given(polys, polys.filter(lambda q: not q.is_zero()))
    def test_divmod(self, a, b):
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree

    def test_gcd(self):
        a = Poly([1, -1]) * Poly([2, 1])
        b = Poly([1, -1]) * Poly([0, 0, 1])
        assert poly_gcd(a, b) == Poly([-1, 1])

    @given(rationals, rationals)
    def test_exact_add_sub(self, a, b):
        assert (a + b) - b == a
        assert (Poly([a]) + Poly([b]) - Poly([b])) == Poly([a])

    def test_format(self):
        assert str(Poly([1, -1, 0, Fraction(1, 2)])) == "1 - z + 1/2*z^3"


class TestSeries:
    def test_substitute_examples(self):
        f = TruncatedSeries([1] * 6)
        assert series_substitute_power(f, 2).coeffs == tuple(map(Fraction, [1, 0, 1, 0, 1, 0]))
        assert series_substitute_power(f, 1) == f
        tm = TruncatedSeries([1, -1, -1, 1])
        assert series_substitute_power(tm, 2).coeffs == tuple(map(Fraction, [1, 0, -1, 0]))

    def test_order_is_kept(self):
        f = TruncatedSeries([1, 2, 3], 3)
        assert (f * f).order == 3
        assert f.derivative().order == 2

    @given(st.lists(rationals, min_size=1, max_size=12))
    def test_substitute_rule(self, values):
        f = TruncatedSeries(values)
        for s in (1, 2, 3):
            g = series_substitute_power(f, s)
            assert g.order == f.order
            for i in range(f.order):
                assert g[i] == (f[i // s] if i % s == 0 else 0)

    @given(st.lists(rationals, min_size=1, max_size=10).filter(lambda v: v[0] != 0))
    def test_inverse(self, values):
        f = TruncatedSeries(values)
        one = f * f.inverse()
        assert one.coeffs == (1,) + (0,) * (f.order - 1)


class TestRational:
    def test_examples(self):
        assert series_of_rational(RationalFn(1, Poly([1, -1])), 5) == geometric(5)
        assert series_of_rational(RationalFn(Poly([1, -1])), 3).coeffs == (1, -1, 0)
        sq = RationalFn(1, Poly([1, -1]) ** 2)
        assert series_of_rational(sq, 4).coeffs == (1, 2, 3, 4)

    def test_pole_at_zero(self):
        with pytest.raises(NotAPowerSeries):
            series_of_rational(RationalFn(1, Poly([0, 1])), 4)

    def test_common_z_power_cancels(self):
        r = RationalFn(Poly([0, 1]), Poly([0, 1, -1]))
        assert series_of_rational(r, 4) == geometric(4)

    def test_normalization(self):
        r = RationalFn(Poly([2, 2]), Poly([4, 4, 0]))
        assert r.num == Poly([Fraction(1, 2)]) and r.den == Poly([1])


class TestLinalg:
    def test_examples(self):
        assert nullspace(RatMatrix.from_rows([[1, -1]])) == [[1, 1]]
        assert nullspace(RatMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == []
        (v,) = nullspace(RatMatrix.from_rows([[1, 2], [2, 4]]))
        assert v in ([2, -1], [-2, 1])

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
    def test_nullspace_against_oracle(self, rows):
        m = RatMatrix.from_rows(rows)
        basis = nullspace(m)
        for v in basis:
            assert all(x == 0 for x in m @ v)
            assert all(Fraction(x).denominator == 1 for x in v)
        assert len(basis) == 4 - len(oracles.rref(rows))
        assert len(basis) == 4 - rank(m)
        if basis:
            assert oracles.rref(basis) == oracles.rref(oracles.nullspace(rows, 4))


class TestPade:
    def test_geometric(self):
        assert pade(geometric(10), 1, 1) == RationalFn(1, Poly([1, -1]))

    def test_thue_morse_has_none(self):
        assert pade(TruncatedSeries(thue_morse_prefix(64)), 5, 5) is None

    def test_rational_recovered(self):
        target = RationalFn(Poly([1, 1]), Poly([1, -1]))
        f = TruncatedSeries(oracles.series_of([1, 1], [1, -1], 10))
        assert pade(f, 2, 2) == target

    def test_insufficient_order(self):
        with pytest.raises(InsufficientOrder):
            pade(geometric(5), 2, 2)

    @given(st.lists(st.integers(-3, 3), min_size=1, max_size=3),
           st.lists(st.integers(-3, 3), min_size=0, max_size=2))
    def test_round_trip(self, num, den_tail):
        den = [1] + den_tail
        f = TruncatedSeries(oracles.series_of(num, den, 16))
        r = pade(f, 3, 3)
        assert r is not None
        assert series_of_rational(r, 16) == f
