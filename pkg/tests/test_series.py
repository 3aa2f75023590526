from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from genusforge.ring import RingElement
from genusforge.series import (
    BadConstantTermError,
    NonUnitDivisionError,
    NotRevertibleError,
    Series1,
    Series2,
    bivariate_from_exp,
    compose1_2,
    exp_series,
    log_series,
    sqrt_series,
)

from conftest import rationals
from oracles import lagrange_revert

R = RingElement
gen = R.gen


@st.composite
def small_series(draw, order=6, constant=None, unit_linear=False):
    coeffs = [draw(rationals) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = constant
    if unit_linear:
        coeffs[1] = 1
    return Series1(coeffs, order)


class TestArith:
    def test_basic_identities(self):
        n = 6
        z = Series1.x(n)
        one = Series1.constant(1, n)
        assert (one + z) * (one - z) == one - z * z
        geo = one / (one - z)
        assert geo == Series1([1] * (n + 1), n)
        f = z + z * z * gen("gamma")
        assert f * z == Series1([0, 0, 1, gen("gamma")], n)

    def test_div_requires_unit(self):
        n = 4
        with pytest.raises(NonUnitDivisionError):
            Series1.x(n) / Series1.x(n)

    def test_div_by_laurent_unit_constant(self):
        n = 4
        t = gen("t")
        f = Series1.constant(t, n) + Series1.x(n)
        out = Series1.constant(1, n) / f
        assert (out * f) == Series1.constant(1, n)

    @given(small_series(), small_series(), st.integers(min_value=0, max_value=6))
    def test_truncation_functoriality(self, a, b, m):
        assert (a * b).truncate(m) == (a.truncate(m) * b.truncate(m))
        assert (a + b).truncate(m) == a.truncate(m) + b.truncate(m)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            Series1.x(3) + Series1.x(4)


class TestCompose:
    def test_known_compositions(self):
        n = 4
        z = Series1.x(n)
        sq = z * z
        inner = z + z * z
        assert sq.compose(inner) == Series1([0, 0, 1, 2, 1], n)
        e = exp_series(z) - 1
        lg = log_series(Series1.constant(1, n) + z)
        assert e.compose(lg) == z
        f = Series1([3, 1, Fraction(1, 2), 0, 5], n)
        assert f.compose(z) == f

    def test_inner_constant_guard(self):
        with pytest.raises(BadConstantTermError):
            Series1.x(4).compose(Series1.constant(1, 4))

    @given(small_series(constant=0), small_series(constant=0), small_series(constant=0))
    def test_associativity(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


class TestRevert:
    def test_identity(self):
        assert Series1.x(5).revert() == Series1.x(5)

    def test_catalan(self):
        n = 6
        z = Series1.x(n)
        g = (z - z * z).revert()
        assert [g[k].as_rational() for k in range(7)] == [0, 1, 1, 2, 5, 14, 42]

    def test_exp_log_pair(self):
        n = 8
        z = Series1.x(n)
        e = exp_series(z) - 1
        assert e.revert() == log_series(Series1.constant(1, n) + z)

    @given(small_series(order=7, constant=0, unit_linear=True))
    def test_against_lagrange_oracle(self, f):
        assert f.revert() == lagrange_revert(f)

    @given(small_series(order=6, constant=0, unit_linear=True))
    def test_involution(self, f):
        g = f.revert()
        assert g.revert() == f
        assert f.compose(g) == Series1.x(6)
        assert g.compose(f) == Series1.x(6)

    def test_not_revertible(self):
        with pytest.raises(NotRevertibleError):
            (Series1.constant(1, 4) + Series1.x(4)).revert()
        with pytest.raises(NotRevertibleError):
            (Series1.x(4) * Series1.x(4)).revert()


class TestAnalytic:
    def test_exp_series(self):
        n = 6
        e = exp_series(Series1.x(n))
        assert [e[k].as_rational() for k in range(5)] == [
            1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24),
        ]

    def test_log_series(self):
        n = 6
        lg = log_series(Series1.constant(1, n) + Series1.x(n))
        assert [lg[k].as_rational() for k in range(5)] == [
            0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4),
        ]

    def test_sqrt_feeds_hyperbolic_law(self):
        n = 6
        z = Series1.x(n)
        s = sqrt_series(Series1.constant(1, n) + z * z * Fraction(1, 4))
        assert [s[k].as_rational() for k in range(6)] == [
            1, 0, Fraction(1, 8), 0, Fraction(-1, 128), 0,
        ]

    @given(small_series(constant=0))
    def test_exp_log_inverse(self, f):
        assert log_series(exp_series(f)) == f

    @given(small_series(constant=1))
    def test_sqrt_squares_back(self, f):
        s = sqrt_series(f)
        assert s * s == f

    def test_constant_guards(self):
        with pytest.raises(BadConstantTermError):
            exp_series(Series1.constant(1, 3))
        with pytest.raises(BadConstantTermError):
            log_series(Series1.x(3))
        with pytest.raises(BadConstantTermError):
            sqrt_series(Series1.x(3))


class TestBivariate:
    def test_additive(self):
        F = bivariate_from_exp(Series1.x(5))
        assert F == Series2({(1, 0): 1, (0, 1): 1}, 5)

    def test_multiplicative_exact(self):
        n = 8
        F = bivariate_from_exp(exp_series(Series1.x(n)) - 1)
        assert F == Series2({(1, 0): 1, (0, 1): 1, (1, 1): 1}, n)

    def test_gamma_leading_term(self):
        from genusforge.fgl import gamma_exponential

        F = bivariate_from_exp(gamma_exponential(3))
        assert F[(1, 1)] == gen("gamma") * 2

    def test_requires_unit_linear(self):
        with pytest.raises(NotRevertibleError):
            bivariate_from_exp(Series1.x(4) * 2)

    def test_series2_mul_and_inverse(self):
        n = 6
        den = Series2({(0, 0): 1, (1, 1): gen("t", 1, -1)}, n)
        inv = den.inverse()
        assert den * inv == Series2.constant(1, n)

    def test_series2_compose(self):
        n = 5
        F = Series2({(1, 0): 1, (0, 1): 1, (1, 1): 1}, n)
        phi = exp_series(Series1.x(n)) - 1
        lhs = compose1_2(phi, F)
        rhs = F.compose(phi, phi)
        assert isinstance(lhs, Series2) and isinstance(rhs, Series2)

    def test_eval_at(self):
        n = 5
        F = Series2({(1, 0): 1, (0, 1): 1, (1, 1): 1}, n)
        z = Series1.x(n)
        w = F.eval_at(z, z)  # F(z, z) = 2z + z^2
        assert w == Series1([0, 2, 1], n)

    def test_symmetry_probe(self):
        F = Series2({(1, 0): 1, (0, 1): 1, (2, 1): 1}, 4)
        assert not F.is_symmetric()
        assert F.swap() == Series2({(1, 0): 1, (0, 1): 1, (1, 2): 1}, 4)


class TestJson:
    @given(small_series(order=4))
    def test_series1_round_trip(self, f):
        assert Series1.from_json(f.to_json()) == f

    def test_series1_dense_layout(self):
        f = Series1([1, 0, Fraction(1, 2)], 3)
        obj = f.to_obj()
        assert obj["order"] == 3
        assert len(obj["coeffs"]) == 4

    def test_series2_round_trip(self):
        F = Series2({(1, 0): 1, (0, 1): 1, (1, 1): gen("t")}, 5)
        assert Series2.from_json(F.to_json()) == F

    def test_series2_omits_zeros(self):
        F = Series2({(1, 0): 1, (0, 1): 1}, 5)
        assert set(F.to_obj()["coeffs"]) == {"1,0", "0,1"}


class TestTruncationFunctoriality:
    @given(small_series(constant=0), st.integers(min_value=1, max_value=6))
    def test_exp(self, f, m):
        assert exp_series(f).truncate(m) == exp_series(f.truncate(m))

    @given(small_series(constant=1), st.integers(min_value=0, max_value=6))
    def test_sqrt(self, f, m):
        assert sqrt_series(f).truncate(m) == sqrt_series(f.truncate(m))

    @given(
        small_series(constant=0, unit_linear=True),
        st.integers(min_value=1, max_value=6),
    )
    def test_revert(self, f, m):
        assert f.revert().truncate(m) == f.truncate(m).revert()

    @given(
        small_series(),
        small_series(constant=0),
        st.integers(min_value=0, max_value=6),
    )
    def test_compose(self, f, g, m):
        assert f.compose(g).truncate(m) == f.truncate(m).compose(g.truncate(m))
