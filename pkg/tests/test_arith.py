from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from tutteratio.bipoly import BiPoly
from tutteratio.linalg import solve_linear_exact
from tutteratio.parse import ParseError, parse_expr, parse_ratfun
from tutteratio.poly import PoleError, Poly, RatFun, poly_gcd, ratfun_eval, squarefree_part
from tutteratio.printing import bipoly_to_str, poly_to_str, ratfun_to_str

x = Poly.var()
fracs = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 50))
small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(Poly)


@given(fracs, fracs, fracs)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    for v in (a + b, a * b, a - c):
        assert v.denominator > 0
        assert gcd(v.numerator, v.denominator) == 1


def test_gcd_examples():
    assert poly_gcd(x**2 - 1, x**2 - 2 * x + 1) == x - 1
    p = 3 * x**2 + 6
    assert poly_gcd(p, Poly([])) == p.monic()
    assert poly_gcd(x**3 - x, x**2) == x
    assert poly_gcd(Poly([]), Poly([])).is_zero()


@given(small_polys, small_polys, small_polys)
def test_gcd_divides_and_is_greatest(g, u, v):
    if g.is_zero() or u.is_zero() or v.is_zero():
        return
    a, b = g * u, g * v
    d = poly_gcd(a, b)
    assert (a % d).is_zero() and (b % d).is_zero()
    assert (d % g.monic()).is_zero()
    assert d.lc == 1


def test_gcd_over_q_of_n():
    f = parse_ratfun("(n*k+1)*(k-n)/((k^2+n)*(k+n+1))", ("n", "k"))
    g = parse_ratfun("(k+n+1)*(k^2+n)/((n*k+1)*(k+3))", ("n", "k"))
    prod = f * g
    assert prod == parse_ratfun("(k-n)/(k+3)", ("n", "k"))


def test_squarefree_part():
    assert squarefree_part((x - 1) ** 3 * (x + 2)) == (x - 1) * (x + 2)


def test_solve_unique():
    sol = solve_linear_exact([[1, 1], [1, -1]], [2, 0])
    assert sol.consistent and sol.particular == [1, 1] and sol.nullspace == []


def test_solve_homogeneous():
    sol = solve_linear_exact([[1, 1]])
    assert len(sol.nullspace) == 1
    v = sol.nullspace[0]
    assert v[0] + v[1] == 0 and v[0] != 0


def test_solve_rank_one():
    sol = solve_linear_exact([[2, 4], [1, 2]], [2, 1])
    assert sol.consistent
    assert sol.particular == [1, 0]
    (v,) = sol.nullspace
    assert v[0] / v[1] == -2


def test_solve_inconsistent_and_mismatch():
    assert not solve_linear_exact([[1, 1], [1, 1]], [0, 1]).consistent
    with pytest.raises(ValueError):
        solve_linear_exact([[1, 2]], [1, 2])


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_solutions_substitute_back(rows, rhs):
    rhs = rhs[: len(rows)]
    sol = solve_linear_exact(rows, rhs)
    if sol.consistent:
        for row, b in zip(rows, rhs):
            assert sum(Fraction(a) * s for a, s in zip(row, sol.particular)) == b
    for v in sol.nullspace:
        for row in rows:
            assert sum(Fraction(a) * s for a, s in zip(row, v)) == 0


def test_parse_examples():
    p = parse_expr("10*(n-1)*(n^2+14*n+12)", ("n",))
    assert p.degree == 3 and p.lc == 10
    assert parse_expr("0", ("n",)) == 0
    b = parse_expr("x^3*y^4 + x*(x^2+11*x-1)", ("x", "y"))
    assert b.coeff(3, 4) == 1 and b.coeff(1, 0) == -1


@pytest.mark.parametrize("text,pos", [("2n", 1), ("n+", 2), ("(n", 2), ("n^x", 2), ("m+1", 0)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as e:
        parse_expr(text, ("n",))
    assert e.value.pos == pos


def test_parse_rational_literals():
    assert parse_expr("3/4*n + 1/2", ("n",)) == Poly([Fraction(1, 2), Fraction(3, 4)])


@pytest.mark.parametrize("text", [
    "10*n^3 + 130*n^2 - 20*n - 120",
    "27*n^3 + 135*n^2 + 222*n + 120",
    "25*n^6 + 1350*n^5 + 31495*n^4 + 347406*n^3 + 1211092*n^2 + 1580304*n + 665280",
    "n - 1",
    "-n",
    "1/3*n + 7",
])
def test_poly_roundtrip(text):
    p = parse_expr(text, ("n",))
    assert poly_to_str(p, "n") == text
    assert parse_expr(poly_to_str(p, "n"), ("n",)) == p


def test_bipoly_roundtrip():
    text = "x^3*y^4 + 4*x^3*y^3 + 3*x^2*y^3 + y - x"
    b = parse_expr(text, ("x", "y"))
    assert bipoly_to_str(b, ("x", "y")) == text
    assert parse_expr(bipoly_to_str(b, ("x", "y")), ("x", "y")) == b


def test_ratfun_roundtrip_and_eval():
    A2 = parse_ratfun("10*(n-1)*(n^2+14*n+12)/(3*(3*n+5)*(3*n+4)*(n+2))", ("n",))
    assert ratfun_eval(A2, 2) == Fraction(1, 3)
    assert parse_ratfun(ratfun_to_str(A2, "n"), ("n",)) == A2
    assert A2.den.lc == 1
    c = RatFun(Poly([Fraction(5, 27)]))
    assert ratfun_eval(c, 17) == Fraction(5, 27)
    with pytest.raises(PoleError):
        ratfun_eval(parse_ratfun("1/(n-3)", ("n",)), 3)


def test_bipoly_canonical_sign():
    b = BiPoly({(1, 0): Fraction(-2), (0, 1): Fraction(4)})
    c = b.canonical()
    assert c.coeff(0, 1) == 2 and c.coeff(1, 0) == -1
