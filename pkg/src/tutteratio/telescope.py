"""Gosper's algorithm and Zeilberger's creative telescoping.

Terms are described only by their shift ratios (rational functions) plus a
support declaration and an anchor value used for numeric evaluation.
Univariate terms use polynomials over Q; bivariate terms use polynomials in k
over Q(n) (``level`` 2 objects of :mod:`tutteratio.poly`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .holonomic import RecCheck, Recurrence, compose_operators
from .linalg import solve_linear_exact
from .poly import (
    PoleError,
    Poly,
    RatFun,
    clear_denominators,
    integer_roots,
    interpolate,
    poly_gcd,
    resultant,
)


class UnsupportedSupport(ValueError):
    pass


# ---------------------------------------------------------------------------
# term descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HyperTerm1:
    """t(k) with t(k+1)/t(k) = ratio."""

    ratio: RatFun

    def __post_init__(self):
        if self.ratio.is_zero():
            raise ValueError("hypergeometric ratio must be nonzero")


@dataclass(frozen=True)
class Support:
    """Declared support a*n + b <= k <= c*n + d; ``None`` bounds mean natural."""

    lo: tuple[int, int] | None = None
    hi: tuple[int, int] | None = None

    @property
    def natural(self) -> bool:
        return self.lo is None and self.hi is None

    def bounds(self, n: int) -> tuple[int | None, int | None]:
        lo = None if self.lo is None else self.lo[0] * n + self.lo[1]
        hi = None if self.hi is None else self.hi[0] * n + self.hi[1]
        return lo, hi

    def describe(self) -> str:
        if self.natural:
            return "natural"

        def lin(t):
            a, b = t
            s = {0: "", 1: "n", -1: "-n"}.get(a, f"{a}*n")
            if not s:
                return str(b)
            return s if b == 0 else f"{s}{b:+d}"

        lo = "-inf" if self.lo is None else lin(self.lo)
        hi = "inf" if self.hi is None else lin(self.hi)
        return f"F(n,k) = 0 outside {lo} <= k <= {hi}"


@dataclass(frozen=True)
class HyperTerm2:
    """F(n, k) given by ratio_n = F(n+1,k)/F(n,k), ratio_k = F(n,k+1)/F(n,k).

    ``anchor = (n0, k0, F(n0, k0))`` fixes the otherwise free constant for
    numeric evaluation.
    """

    ratio_n: RatFun
    ratio_k: RatFun
    support: Support = field(default_factory=Support)
    anchor: tuple[int, int, Fraction] = (0, 0, Fraction(1))

    def is_compatible(self) -> bool:
        lhs = self.ratio_n.shift(1) * self.ratio_k
        rhs = shift_n(self.ratio_k, 1) * self.ratio_n
        return lhs == rhs

    # numeric evaluation -------------------------------------------------
    def column(self, n_values: Iterable[int]) -> dict[int, Fraction]:
        """F(n, k0) for the requested n, walking from the anchor."""
        n0, k0, v0 = self.anchor
        wanted = sorted(set(n_values))
        out: dict[int, Fraction] = {}
        if not wanted:
            return out
        v = Fraction(v0)
        n = n0
        up = [m for m in wanted if m >= n0]
        for m in up:
            while n < m:
                v *= eval2(self.ratio_n, n, k0)
                n += 1
            out[m] = v
        v, n = Fraction(v0), n0
        for m in reversed([m for m in wanted if m < n0]):
            while n > m:
                v /= eval2(self.ratio_n, n - 1, k0)
                n -= 1
            out[m] = v
        return out

    def row(self, n: int, at_k0: Fraction) -> dict[int, Fraction]:
        """All nonzero F(n, k) over the support, given F(n, k0)."""
        k0 = self.anchor[1]
        lo, hi = self.support.bounds(n)
        if lo is not None and hi is not None and lo > hi:
            return {}
        num = self.ratio_k.num.map_coeffs(lambda c: _at(c, n), level=1)
        den = self.ratio_k.den.map_coeffs(lambda c: _at(c, n), level=1)
        limit = 10 * (abs(n) + 10) + 1000
        vals = {k0: Fraction(at_k0)} if at_k0 else {}
        if not at_k0:
            return {}
        # upward
        v, k, steps = Fraction(at_k0), k0, 0
        while hi is None or k < hi:
            d, u = den(k), num(k)
            if d == 0:
                raise UnsupportedSupport(f"pole of ratio_k at (n, k) = ({n}, {k})")
            v = v * u / d
            k += 1
            if v == 0:
                break
            vals[k] = v
            steps += 1
            if steps > limit:
                raise UnsupportedSupport("term does not terminate in k (infinite support)")
        # downward
        v, k, steps = Fraction(at_k0), k0, 0
        while lo is None or k > lo:
            d, u = den(k - 1), num(k - 1)
            if d == 0:
                break
            if u == 0:
                raise UnsupportedSupport(f"zero of ratio_k at (n, k) = ({n}, {k - 1})")
            v = v * d / u
            k -= 1
            vals[k] = v
            steps += 1
            if steps > limit:
                raise UnsupportedSupport("term does not terminate in k (infinite support)")
        if lo is not None or hi is not None:
            vals = {k: x for k, x in vals.items()
                    if (lo is None or k >= lo) and (hi is None or k <= hi)}
        return vals

    def sums(self, n_values: Iterable[int]) -> dict[int, Fraction]:
        """S(n) = sum_k F(n, k) over the support."""
        n_values = list(n_values)
        col = self.column(n_values)
        return {n: sum(self.row(n, col[n]).values(), Fraction(0)) for n in n_values}


@dataclass(frozen=True)
class Certificate:
    """sum_i p_i(n) F(n+i, k) = G(n, k+1) - G(n, k) with G = R * F."""

    R: RatFun
    operator: Recurrence


# ---------------------------------------------------------------------------
# helpers on level-2 objects
# ---------------------------------------------------------------------------

def _at(c, n):
    return c(n) if isinstance(c, RatFun) else Fraction(c)


def _shift_coeff(c, j):
    return c.shift(j) if isinstance(c, RatFun) else c


def shift_n(f: RatFun, j: int) -> RatFun:
    """f(n + j, k) for a rational function in k over Q(n)."""
    return f.map_coeffs(lambda c: _shift_coeff(c, j))


def eval2(f: RatFun, n, k) -> Fraction:
    """Value of a level-2 rational function at (n, k); PoleError at poles."""
    if f.level == 1:
        return f(k)
    num = f.num.map_coeffs(lambda c: _at(c, n), level=1)(k)
    den = f.den.map_coeffs(lambda c: _at(c, n), level=1)(k)
    if den == 0:
        raise PoleError(f"pole at (n, k) = ({n}, {k})")
    return num / den


def _specialize_point(polys: list[Poly]):
    """A rational n0 at which level-2 polys keep their degrees and have no poles."""
    for i in range(1, 200):
        n0 = Fraction(2 * i + 1, 2 * i + 7)
        try:
            specs = [p.map_coeffs(lambda c: _at(c, n0), level=1) for p in polys]
        except ZeroDivisionError:
            continue
        if all(s.degree == p.degree for s, p in zip(specs, polys)):
            return specs
    raise ArithmeticError("no admissible specialization point")


def dispersion_set(q: Poly, r: Poly) -> list[int]:
    """Positive integers j with gcd(q(k), r(k + j)) nonconstant, ascending.

    Candidates are the integer roots of res_k(q(k), r(k+j)) as a polynomial in
    j (built by interpolation; over Q(n) after specializing n), each confirmed
    by an exact gcd.
    """
    if q.degree < 1 or r.degree < 1:
        return []
    qs, rs = (q, r) if q.level == 1 else _specialize_point([q, r])
    D = qs.degree * rs.degree
    xs = list(range(D + 1))
    R = interpolate(xs, [resultant(qs, rs.shift(j)) for j in xs])
    if R.is_zero():
        raise ArithmeticError("resultant vanishes identically")
    return [j for j in integer_roots(R) if j >= 1 and poly_gcd(q, r.shift(j)).degree > 0]


def gosper_normal_form(ratio: RatFun) -> tuple[Poly, Poly, Poly]:
    """(p, q, r) with ratio = p(k+1)/p(k) * q(k)/r(k+1), gcd(q(k), r(k+j)) = 1 for j >= 1."""
    p = ratio.num.one()
    q = ratio.num
    r = ratio.den.shift(-1)
    for j in dispersion_set(q, r):
        g = poly_gcd(q, r.shift(j))
        if g.degree < 1:
            continue
        q = q.exact_div(g)
        r = r.exact_div(g.shift(-j))
        for i in range(1, j):
            p = p * g.shift(-i)
    return p, q, r


def _nonneg_int(x) -> int | None:
    if isinstance(x, RatFun):
        if not x.is_constant():
            return None
        x = x.constant()
    x = Fraction(x)
    if x.denominator == 1 and x >= 0:
        return int(x)
    return None


def gosper_degree_bound(q: Poly, r: Poly, deg_p: int) -> int:
    """Upper bound on deg f for q(k) f(k+1) - r(k) f(k) = p(k)."""
    diff, tot = q - r, q + r
    if diff.degree >= tot.degree:
        return deg_p - diff.degree
    d = tot.degree
    bound = deg_p - d + 1
    lam = _nonneg_int(-2 * diff.coeff(d - 1) / tot.lc)
    if lam is not None:
        bound = max(bound, lam)
    return bound


def _coeff_column(p: Poly, rows: int) -> list:
    return [p.coeff(i) for i in range(rows)]


# ---------------------------------------------------------------------------
# Gosper
# ---------------------------------------------------------------------------

def gosper(term: HyperTerm1) -> RatFun | None:
    """R(k) with R(k+1) * ratio(k) - R(k) = 1, or None if t has no hypergeometric antidifference."""
    p, q, r = gosper_normal_form(term.ratio)
    delta = gosper_degree_bound(q, r, p.degree)
    if delta < 0:
        return None
    k = Poly.var(p.level)
    cols = []
    for m in range(delta + 1):
        km = k ** m
        cols.append(q * km.shift(1) - r * km)
    nrows = max([p.degree] + [c.degree for c in cols]) + 1
    matrix = [[c.coeff(i) for c in cols] for i in range(nrows)]
    sol = solve_linear_exact(matrix, _coeff_column(p, nrows))
    if not sol.consistent:
        return None
    f = Poly(sol.particular, p.level)
    return RatFun(r * f, p)


# ---------------------------------------------------------------------------
# Zeilberger
# ---------------------------------------------------------------------------

def _try_order(term: HyperTerm2, d: int) -> Certificate | None:
    sigmas = [RatFun(1, level=2)]
    for i in range(d):
        sigmas.append(sigmas[-1] * shift_n(term.ratio_n, i))
    w = sigmas[0].den.one()
    for s in sigmas:
        w = w * s.den.exact_div(poly_gcd(w, s.den))
    us = [s.num * w.exact_div(s.den) for s in sigmas]
    h_ratio = term.ratio_k * RatFun(w) / RatFun(w.shift(1))
    p, q, r = gosper_normal_form(h_ratio)
    deg_p = max(u.degree for u in us) + p.degree
    delta = gosper_degree_bound(q, r, deg_p)
    k = Poly.var(2)
    cols = [u * p for u in us]
    for m in range(max(delta, -1) + 1):
        km = k ** m
        cols.append(r * km - q * km.shift(1))
    nrows = max(c.degree for c in cols) + 1
    matrix = [[c.coeff(i) for c in cols] for i in range(nrows)]
    sol = solve_linear_exact(matrix)
    for v in sol.nullspace:
        a = v[: d + 1]
        if all(x == 0 for x in a):
            continue
        a = [x if isinstance(x, RatFun) else RatFun(Poly([x])) for x in a]
        f = Poly(v[d + 1:], level=2)
        polys, scale = clear_denominators(a)
        # G(n,k) = r f / (p w) * F(n,k) solves the scaled telescoping equation
        R = RatFun(r * f, p * w) * scale
        return Certificate(R, Recurrence(tuple(polys), 0))
    return None


def zeilberger(term: HyperTerm2, max_order: int = 4) -> Certificate | None:
    """Smallest-order telescoping operator with its certificate, or None."""
    if not term.is_compatible():
        raise ValueError("ratio_n and ratio_k are not compatible")
    for d in range(max_order + 1):
        cert = _try_order(term, d)
        if cert is not None:
            return cert
    return None


def verify_certificate(term: HyperTerm2, cert: Certificate) -> bool:
    """Exact check of sum_i p_i(n) F(n+i,k)/F(n,k) = R(n,k+1) ratio_k - R(n,k)."""
    total = RatFun(0, level=2)
    sigma = RatFun(1, level=2)
    for i, p in enumerate(cert.operator.coeffs):
        if i:
            sigma = sigma * shift_n(term.ratio_n, i - 1)
        if p:
            total = total + sigma * RatFun(p)
    rhs = cert.R.shift(1) * term.ratio_k - cert.R
    return (total - rhs).is_zero()


def numeric_sum_check(term: HyperTerm2, operator: Recurrence, n_range: tuple[int, int]) -> RecCheck:
    """Apply ``operator`` to S(n) = sum_k F(n,k), computed exactly over the support."""
    lo, hi = n_range
    d = operator.order
    S = term.sums(range(lo, hi + d + 1))
    for n in range(lo, hi + 1):
        res = sum((p(n) * S[n + i] for i, p in enumerate(operator.coeffs) if p), Fraction(0))
        if res != 0:
            return RecCheck(False, n, lo, hi)
    return RecCheck(True, None, lo, hi)


def natural_support(term: HyperTerm2) -> HyperTerm2:
    """The same term summed over its natural support (walk until a zero or pole)."""
    return HyperTerm2(term.ratio_n, term.ratio_k, Support(), term.anchor)


def operator_defect(term: HyperTerm2, operator: Recurrence, n_range: tuple[int, int]) -> list[Fraction]:
    """D(n) = sum_i p_i(n) S(n+i) over the declared support, for lo <= n <= hi."""
    lo, hi = n_range
    S = term.sums(range(lo, hi + operator.order + 1))
    return [sum((p(n) * S[n + i] for i, p in enumerate(operator.coeffs) if p), Fraction(0))
            for n in range(lo, hi + 1)]


def boundary_corrected(term: HyperTerm2, operator: Recurrence, n_range: tuple[int, int], cfg=None) -> Recurrence | None:
    """Left-multiply ``operator`` so it annihilates the sum over the declared support.

    A telescoper annihilates the sum over the natural support.  When the
    declared support is smaller, the leftover D(n) is a sum of boundary
    values; if D is hypergeometric, its first-order annihilator M makes
    M * operator exact on the declared sum.  The result is checked on the
    whole window before it is returned.
    """
    from .guess import GuessConfig, guess_recurrence

    lo, hi = n_range
    D = operator_defect(term, operator, n_range)
    if not any(D):
        return operator
    cfg = cfg or GuessConfig(max_order=1, max_poly_degree=16)
    M = guess_recurrence(D, cfg, offset=lo)
    if M is None:
        return None
    L = compose_operators(M, operator)
    if not numeric_sum_check(term, L, (max(lo, L.valid_from), hi - 1)).ok:
        return None
    return L


def binomial_term() -> HyperTerm2:
    """F(n, k) = binomial(n, k) with natural support and F(0, 0) = 1."""
    from .parse import parse_ratfun

    return HyperTerm2(
        parse_ratfun("(n+1)/(n+1-k)", ("n", "k")),
        parse_ratfun("(n-k)/(k+1)", ("n", "k")),
        Support(),
        (0, 0, Fraction(1)),
    )
