from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tutteratio.acceptance import brute_power_coeff
from tutteratio.series import Series, coeff_of, series_add, series_mul, series_pow
from tutteratio.tutte import tutte_series

small_fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 9))
coeff_lists = st.lists(small_fracs, min_size=1, max_size=9)


def test_add_examples():
    assert series_add(Series([0, 1, 0]), Series([0, 0, 3])) == Series([0, 1, 3])
    a = Series([1, 2, 3])
    assert a + Series.zero(2) == a
    g = tutte_series(10)
    assert g + (-g) == Series.zero(10)


def test_add_takes_min_order():
    assert series_add(Series([1, 1, 1]), Series([1])).order == 0


def test_mul_examples():
    a = Series([0, 1, 3, 0])
    assert series_mul(a, a) == Series([0, 0, 1, 6])
    assert a * Series.one(3) == a
    g = tutte_series(4)
    assert coeff_of(g * g, 4) == 35


def test_pow_examples():
    g = tutte_series(5)
    assert series_pow(g, 1) == g
    assert coeff_of(series_pow(g, 3), 3) == 1
    assert coeff_of(series_pow(g, 3), 5) == 66
    with pytest.raises(ValueError):
        series_pow(g, 0)


def test_coeff_of():
    g = tutte_series(5)
    assert coeff_of(g, 3) == 13 and coeff_of(g, 0) == 0
    assert coeff_of(g * g, 2) == 1
    with pytest.raises(IndexError):
        coeff_of(g, 6)


def test_pow_matches_composition_sums():
    g = tutte_series(12)
    for r in range(1, 6):
        gr = series_pow(g, r)
        for n in range(13):
            assert gr.coeffs[n] == brute_power_coeff(g.coeffs, r, n)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    A, B, C = Series(a), Series(b), Series(c)
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)


@given(coeff_lists, st.integers(1, 4), st.integers(1, 4))
def test_pow_adds_exponents(a, r, s):
    A = Series(a)
    assert series_pow(A, r + s) == series_mul(series_pow(A, r), series_pow(A, s))


@given(coeff_lists, st.integers(1, 5))
def test_low_coefficients_vanish(a, r):
    A = Series([0] + a)
    P = series_pow(A, r)
    assert all(P.coeffs[n] == 0 for n in range(min(r, P.order + 1)))


def test_derivative_lowers_order():
    d = Series([1, 2, 3, 4]).derivative()
    assert d == Series([2, 6, 12]) and d.order == 2


def test_rational_coefficients():
    a = Series([Fraction(1, 2), Fraction(1, 3)])
    assert series_mul(a, a) == Series([Fraction(1, 4), Fraction(1, 3)])
