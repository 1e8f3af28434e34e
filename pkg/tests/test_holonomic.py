from fractions import Fraction
from math import comb

import pytest

from tutteratio.bipoly import BiPoly
from tutteratio.holonomic import (
    DegenerateEquation,
    LinearODE,
    Recurrence,
    RecurrenceError,
    algeq_to_ode,
    compose_operators,
    derivative_vectors,
    hyperterm_to_rec,
    ode_to_rec,
    rec_check,
    rec_unroll,
)
from tutteratio.linalg import solve_linear_exact
from tutteratio.parse import parse_expr, parse_ratfun
from tutteratio.poly import Poly
from tutteratio.series import Series
from tutteratio.tutte import quartic, term_ratio, tutte_coeff, tutte_series

n = Poly.var()
xy = ("x", "y")


def P(text):
    return parse_expr(text, xy)


def same_up_to_scalar(a, b):
    ratio = None
    for p, q in zip(a, b):
        if p.is_zero() != q.is_zero():
            return False
        if p.is_zero():
            continue
        r = p.lc / q.lc
        if ratio is None:
            ratio = r
        if p != q * ratio:
            return False
    return len(a) == len(b)


def test_geometric_ode():
    ode = algeq_to_ode(P("(1-x)*y - 1"))
    assert same_up_to_scalar(ode.coeffs, (Poly([-1]), Poly([1, -1])))


def test_sqrt_ode():
    ode = algeq_to_ode(P("y^2 - (1-x)"))
    assert same_up_to_scalar(ode.coeffs, (Poly([1]), Poly([2, -2])))


def test_quartic_ode_annihilates_series():
    ode = algeq_to_ode(quartic().P)
    assert ode.order <= 4
    res = ode.apply(tutte_series(200))
    assert all(c == 0 for c in res.coeffs)


def test_ode_order_is_minimal():
    Q = quartic().P
    ode = algeq_to_ode(Q)
    vecs = derivative_vectors(Q, ode.order)
    m = [[v[i] for v in vecs] for i in range(len(vecs[0]))]
    assert solve_linear_exact(m).nullspace == []


def test_degenerate_equation():
    with pytest.raises(DegenerateEquation):
        algeq_to_ode(BiPoly({(1, 0): Fraction(1)}))


def test_squarefree_input_is_reduced():
    ode = algeq_to_ode(P("((1-x)*y - 1)^2"))
    assert ode.order == 1


def test_ode_to_rec_examples():
    rec = ode_to_rec(LinearODE((Poly([-1]), Poly([1, -1]))))
    assert same_up_to_scalar(rec.coeffs, (-(n + 1), n + 1))
    rec = ode_to_rec(LinearODE((Poly([-1]), Poly([1]))))
    assert same_up_to_scalar(rec.coeffs, (Poly([-1]), n + 1))
    assert rec.coeffs[-1].lc > 0


def test_quartic_pipeline_on_t():
    rec = ode_to_rec(algeq_to_ode(quartic().P))
    seq = [tutte_coeff(k) for k in range(1, 501)]
    assert rec_check(rec, seq, start=1, offset=1).ok


def test_pipeline_on_catalan():
    eq = P("x*y^2 - y + 1")
    rec = ode_to_rec(algeq_to_ode(eq))
    cat = [Fraction(comb(2 * k, k), k + 1) for k in range(60)]
    assert rec_check(rec, cat).ok
    d = rec.order
    assert rec_unroll(rec, cat[:d], 60) == cat


def test_rec_check_examples():
    r = Recurrence((Poly([-1]), Poly([1])))
    assert rec_check(r, [5] * 10).ok
    chk = rec_check(r, [1, 2, 3])
    assert not chk.ok and chk.first_failure == 0
    with pytest.raises(ValueError):
        rec_check(Recurrence((Poly([1]), Poly([]), Poly([]), Poly([1]))), [1, 2])


def test_first_order_t_recurrence():
    rec = hyperterm_to_rec(term_ratio())
    seq = [tutte_coeff(k) for k in range(1, 301)]
    assert rec_check(rec, seq, offset=1).ok


def test_hyperterm_to_rec_examples():
    assert same_up_to_scalar(hyperterm_to_rec(parse_ratfun("n+1", ("n",))).coeffs, (-(n + 1), Poly([1])))
    assert same_up_to_scalar(hyperterm_to_rec(parse_ratfun("1", ("n",))).coeffs, (Poly([-1]), Poly([1])))
    # the unreduced factorial quotient differs from ours by the common factor n + 1
    rec = hyperterm_to_rec(term_ratio())
    lead = (n + 2) * (3 * n + 5) * (3 * n + 4) * (3 * n + 3)
    tail = (4 * n + 5) * (4 * n + 4) * (4 * n + 3) * (4 * n + 2)
    assert same_up_to_scalar([rec.coeffs[0] * (n + 1), rec.coeffs[1] * (n + 1)], [-tail, lead])


def test_rec_unroll_examples():
    r = Recurrence((Poly([-1]), Poly([1])))
    assert rec_unroll(r, [1], 5) == [1] * 5
    t_rec = hyperterm_to_rec(term_ratio())
    assert rec_unroll(t_rec, [1], 5, start=1) == [1, 3, 13, 68, 399]
    with pytest.raises(RecurrenceError):
        rec_unroll(Recurrence((Poly([1]), Poly([1]), Poly([1]))), [1], 5)
    with pytest.raises(RecurrenceError, match="n = 2"):
        rec_unroll(Recurrence((Poly([1]), n - 2)), [1], 6)


def test_normalized_reindexes_zero_trailing():
    r = Recurrence((Poly([]), Poly([-2]), Poly([4]))).normalized()
    assert r.order == 1 and r.valid_from == 1
    assert r.coeffs == (Poly([-1]), Poly([2]))


def test_compose_operators():
    # (E - 2) after (E - 1) annihilates 2^n and constants
    A = Recurrence((Poly([-1]), Poly([1])))
    B = Recurrence((Poly([-2]), Poly([1])))
    C = compose_operators(B, A)
    assert rec_check(C, [Fraction(2**k + 7) for k in range(20)]).ok


def test_ode_apply_on_exponential():
    from math import factorial
    e = Series([Fraction(1, factorial(k)) for k in range(20)])
    ode = LinearODE((Poly([-1]), Poly([1])))
    assert all(c == 0 for c in ode.apply(e).coeffs)
