import random
from fractions import Fraction
from math import comb, factorial

import pytest

from tutteratio.acceptance import planted_recurrence_trial
from tutteratio.guess import GuessConfig, guess_algeq, guess_ratfun_of_n, guess_recurrence
from tutteratio.holonomic import hyperterm_to_rec, rec_check
from tutteratio.parse import parse_expr, parse_ratfun
from tutteratio.poly import Poly
from tutteratio.series import Series, series_pow
from tutteratio.tutte import PRINTED_A, quartic, ratio_A_table, term_ratio, tutte_series

n = Poly.var()


def test_config_validation():
    with pytest.raises(ValueError):
        GuessConfig(max_order=-1)
    with pytest.raises(ValueError):
        GuessConfig(overdetermination_margin=0)


def test_factorial_recurrence():
    rec = guess_recurrence([factorial(k) for k in range(60)])
    assert rec.coeffs == (-(n + 1), Poly([1]))


def test_fibonacci_recurrence():
    fib = [0, 1]
    while len(fib) < 80:
        fib.append(fib[-1] + fib[-2])
    rec = guess_recurrence(fib)
    assert rec.coeffs == (Poly([-1]), Poly([-1]), Poly([1]))


def test_square_of_g_is_found():
    S = series_pow(tutte_series(80), 2).coeffs
    rec = guess_recurrence(S)
    assert rec is not None and rec.order <= 2
    assert rec_check(rec, S, start=rec.valid_from).ok


def test_t_guess_matches_hyperterm_route():
    g = tutte_series(100)
    rec = guess_recurrence(g.coeffs[1:], offset=1)
    assert rec == hyperterm_to_rec(term_ratio())


def test_stability_on_longer_prefix():
    g = tutte_series(140)
    assert guess_recurrence(g.coeffs[1:101], offset=1) == guess_recurrence(g.coeffs[1:], offset=1)


def test_empty_result_is_a_value():
    rng = random.Random(5)
    seq = [Fraction(rng.randint(-10**6, 10**6)) for _ in range(60)]
    assert guess_recurrence(seq, GuessConfig(max_order=2, max_poly_degree=2)) is None


@pytest.mark.parametrize("seed", range(30))
def test_soundness_gate(seed):
    ok, desc = planted_recurrence_trial(random.Random(seed))
    assert ok, desc


def test_ratfun_examples():
    A2 = ratio_A_table(2, 40)
    f = guess_ratfun_of_n(list(zip(range(1, 41), A2)), GuessConfig(max_poly_degree=3))
    assert f == parse_ratfun(PRINTED_A[2], ("n",))
    c = guess_ratfun_of_n([(k, Fraction(5, 27)) for k in range(1, 40)], GuessConfig(max_poly_degree=3))
    assert c == Fraction(5, 27)
    h = guess_ratfun_of_n([(k, Fraction(k + 1, k)) for k in range(1, 31)], GuessConfig(max_poly_degree=1, holdout=10))
    assert h == parse_ratfun("(n+1)/n", ("n",))


def test_ratfun_not_found():
    rng = random.Random(2)
    samples = [(k, Fraction(rng.randint(1, 10**9))) for k in range(1, 60)]
    assert guess_ratfun_of_n(samples, GuessConfig(max_poly_degree=5)) is None


def test_ratfun_holdout_rejects_late_change():
    samples = [(k, Fraction(k + 1, k)) for k in range(1, 41)]
    samples[-1] = (40, Fraction(7))
    assert guess_ratfun_of_n(samples, GuessConfig(max_poly_degree=1, holdout=10)) is None


def test_algeq_examples():
    geo = guess_algeq(Series([0] + [1] * 40), 1, 1)
    # canonical sign: the graded-lex leading monomial x*y gets a positive coefficient
    assert geo == parse_expr("x - (1-x)*y", ("x", "y"))
    cat = Series([comb(2 * k, k) // (k + 1) for k in range(50)])
    assert guess_algeq(cat, 2, 1) == parse_expr("x*y^2 - y + 1", ("x", "y"))
    assert guess_algeq(tutte_series(60), 4, 3) == quartic().P


def test_algeq_too_short():
    assert guess_algeq(tutte_series(20), 4, 3) is None


def test_algeq_none_for_transcendental():
    e = Series([Fraction(1, factorial(k)) for k in range(60)])
    assert guess_algeq(e, 2, 2) is None
