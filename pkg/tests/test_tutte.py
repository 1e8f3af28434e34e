import math
from fractions import Fraction

import pytest

from tutteratio.parse import parse_ratfun
from tutteratio.poly import Poly
from tutteratio.series import coeff_of, series_pow, substitute
from tutteratio.tutte import (
    PRINTED_A,
    PRINTED_B,
    PRINTED_B_DECIMALS,
    closed_form_A,
    critique_check,
    decimal_sig,
    degree_cap,
    eval_quartic_at,
    limit_B,
    partial_sum_float,
    quartic,
    ratio_A,
    tutte_coeff,
    tutte_series,
)


def factorial_t(n):
    return Fraction(2 * math.factorial(4 * n + 1), math.factorial(n + 1) * math.factorial(3 * n + 2))


def test_coeff_examples():
    assert tutte_coeff(1) == 1
    assert tutte_coeff(0) == 0 and tutte_coeff(-3) == 0
    assert tutte_coeff(5) == 399


def test_coeff_matches_factorials():
    for n in range(1, 40):
        assert tutte_coeff(n) == factorial_t(n)
    g = tutte_series(300)
    assert all(g.coeffs[n] == factorial_t(n) for n in range(1, 301))


def test_series_examples():
    assert list(tutte_series(5).coeffs) == [0, 1, 3, 13, 68, 399]
    assert tutte_series(0).coeffs == (0,)
    assert coeff_of(tutte_series(5), 4) == 68


def convolution(r, n):
    g = [factorial_t(k) if k else Fraction(0) for k in range(n + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(r):
        acc = [sum(acc[i] * g[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return acc[n]


def test_ratio_examples():
    assert ratio_A(2, 3) == Fraction(6, 13)
    assert ratio_A(2, 1) == 0
    assert ratio_A(2, 2) == Fraction(1, 3)


@pytest.mark.parametrize("r,n", [(2, 7), (3, 9), (5, 11), (4, 6)])
def test_ratio_times_t_is_power_coefficient(r, n):
    assert ratio_A(r, n) * tutte_coeff(n) == convolution(r, n)
    assert ratio_A(r, n) * tutte_coeff(n) == coeff_of(series_pow(tutte_series(n), r), n)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_closed_forms_match_printed(r):
    rep = closed_form_A(r)
    assert rep.formula == parse_ratfun(PRINTED_A[r], ("n",))
    assert rep.limit == Fraction(PRINTED_B[r - 2])
    for n in (1, 5, rep.n):
        assert rep.formula(n) == ratio_A(r, n)


@pytest.mark.parametrize("r", range(2, 12))
def test_limits_and_numerator_factor(r):
    rep = closed_form_A(r)
    assert str(rep.limit) == PRINTED_B[r - 2]
    assert decimal_sig(rep.limit, 10) == PRINTED_B_DECIMALS[r - 2]
    assert rep.limit == r * Fraction(5, 27) ** (r - 1)
    n = Poly.var()
    falling = Poly([1])
    for j in range(1, r):
        falling = falling * (n - j)
    assert (rep.formula.num % falling).is_zero()
    assert rep.formula.num.degree == rep.formula.den.degree <= degree_cap(r)


def test_limit_examples():
    assert limit_B(2) == Fraction(10, 27)
    assert limit_B(5) == Fraction(3125, 531441)


def test_decimal_rounding():
    assert decimal_sig(Fraction(10, 27), 3) == "0.370"
    assert decimal_sig(Fraction(1, 8), 2) == "0.12"  # half-even
    assert decimal_sig(Fraction(3, 8), 2) == "0.38"


def test_quartic_examples():
    P = quartic().P
    assert P.coeff(3, 4) == 1
    assert P.coeff(0, 0) == 0 and P.coeff(1, 0) == -1
    assert P.degree_y == 4
    assert all(c == 0 for c in substitute(P, tutte_series(50)).coeffs)


def test_eval_quartic():
    assert Fraction(5, 27) in eval_quartic_at(Fraction(27, 256))
    assert eval_quartic_at(0) == [0]
    assert abs(partial_sum_float(27 / 256, 2000) - 5 / 27) < 1e-5


def test_critique():
    rep = critique_check()
    assert abs(rep.jr_value - 1.253754) < 1e-5
    assert abs(rep.c_value - 0.3703703704) < 1e-9
    assert math.isclose(rep.jr_value, 20 / (9 * math.sqrt(math.pi)), rel_tol=1e-12)
    assert rep.verdict == "JR value exceeds 1 and is irrational-valued expression; exact constant is 10/27"
