"""Printers emitting the expression grammar accepted by :mod:`tutteratio.parse`."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm

from .bipoly import BiPoly
from .poly import Poly, RatFun


def fraction_to_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial(exps: list[tuple[str, int]]) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in exps if e]
    return "*".join(parts)


def _join(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = fraction_to_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{fraction_to_str(a)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def poly_to_str(p: Poly, var: str = "n") -> str:
    if p.level != 1:
        return ratfun_to_str(RatFun(p), var, outer="n")
    terms = [(c, _monomial([(var, i)])) for i, c in reversed(list(enumerate(p.coeffs))) if c]
    return _join(terms)


def bipoly_to_str(b: BiPoly, variables: tuple[str, str] = ("x", "y")) -> str:
    vx, vy = variables
    terms = [(c, _monomial([(vx, i), (vy, j)])) for (i, j), c in b.sorted_terms()]
    return _join(terms)


def _paren(s: str) -> str:
    return f"({s})"


def level2_to_bipoly(p: Poly) -> tuple[BiPoly, object]:
    """Clear coefficient denominators of a Poly over Q(n); returns (BiPoly in (n, k), scale)."""
    from .poly import poly_gcd

    dens = [c.den for c in p.coeffs]
    common = dens[0].one() if dens else Poly([1])
    for d in dens:
        common = common * d.exact_div(poly_gcd(common, d))
    terms = {}
    for j, c in enumerate(p.coeffs):
        q = c.num * common.exact_div(c.den)
        for i, a in enumerate(q.coeffs):
            if a:
                terms[(i, j)] = a
    return BiPoly(terms), common


def ratfun_to_str(f: RatFun, var: str = "n", outer: str = "n") -> str:
    """Print a rational function as ``(num)/(den)``, or the numerator alone.

    Level-2 objects print in the two variables ``outer`` (coefficient field) and
    ``var`` (main variable).
    """
    if f.level == 1:
        num, den = f.integer_form()
        ns = poly_to_str(num, var)
        if den == 1:
            return ns
        if den.degree == 0:
            return f"{_paren(ns)}/{fraction_to_str(den.lc)}" if len(num.coeffs) > 1 else fraction_to_str(f.num.lc)
        return f"{_paren(ns)}/{_paren(poly_to_str(den, var))}"
    nb, ns = level2_to_bipoly(f.num)
    db, ds = level2_to_bipoly(f.den)
    # common scale factors cancel: num/den = (nb/ns)/(db/ds) = (nb*ds)/(db*ns)
    from .parse import poly_to_bipoly_n

    nb = nb * poly_to_bipoly_n(ds)
    db = db * poly_to_bipoly_n(ns)
    scale = reduce(lcm, [c.denominator for c in list(nb.terms.values()) + list(db.terms.values())], 1)
    nb, db = nb * scale, db * scale
    s_num = bipoly_to_str(nb, (outer, var))
    if db == 1:
        return s_num
    return f"{_paren(s_num)}/{_paren(bipoly_to_str(db, (outer, var)))}"
