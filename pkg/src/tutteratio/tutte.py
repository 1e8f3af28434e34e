"""The triangulation series g(x), the ratios A_r(n), the constants B_r and the quartic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .bipoly import BiPoly
from .guess import GuessConfig, guess_ratfun_of_n
from .parse import parse_expr, parse_ratfun
from .poly import RatFun, rational_roots
from .series import Series, coeff_of, series_pow
from .telescope import HyperTerm2, Support

# t(k+1)/t(k) after cancelling (4k+4)/(3k+3)
TERM_RATIO = "8*(4*k+5)*(4*k+3)*(2*k+1)/(3*(k+2)*(3*k+5)*(3*k+4))"

QUARTIC = (
    "x*(x^2+11*x-1) + (4*x^3+25*x^2-14*x+1)*y + x*(6*x^2+17*x+3)*y^2"
    " + x^2*(4*x+3)*y^3 + x^3*y^4"
)

# closed forms as printed for r = 2, 3, 4
PRINTED_A = {
    2: "10*(n-1)*(n^2+14*n+12)/(3*(3*n+5)*(3*n+4)*(n+2))",
    3: "5*(n-1)*(n-2)*(5*n^4+160*n^3+1803*n^2+3768*n+2016)"
       "/(3*(3*n+8)*(3*n+5)*(3*n+7)*(3*n+4)*(n+3)*(n+2))",
    4: "20*(n-1)*(n-2)*(n-3)*(25*n^6+1350*n^5+31495*n^4+347406*n^3+1211092*n^2+1580304*n+665280)"
       "/(27*(3*n+11)*(3*n+8)*(3*n+5)*(3*n+10)*(3*n+7)*(3*n+4)*(n+4)*(n+3)*(n+2))",
}

PRINTED_B = [
    "10/27", "25/243", "500/19683", "3125/531441", "6250/4782969", "109375/387420489",
    "625000/10460353203", "390625/31381059609", "19531250/7625597484987",
    "107421875/205891132094649",
]

PRINTED_B_DECIMALS = [
    "0.3703703704", "0.1028806584", "0.02540263171", "0.005880238822",
    "0.001306719738", "0.0002823159928", "0.00005974941647", "0.00001244779510",
    "0.000002561274712", "0.0000005217411450",
]


def term_ratio() -> RatFun:
    """t(n+1)/t(n) as a rational function of n."""
    return parse_ratfun(TERM_RATIO.replace("k", "n"), ("n",))


def _next(t: int, n: int) -> int:
    num = (4 * n + 5) * (4 * n + 4) * (4 * n + 3) * (4 * n + 2)
    den = (n + 2) * (3 * n + 5) * (3 * n + 4) * (3 * n + 3)
    return t * num // den


def tutte_coeff(n: int) -> Fraction:
    """2(4n+1)!/((n+1)!(3n+2)!) for n >= 1, and 0 for n <= 0."""
    if n <= 0:
        return Fraction(0)
    t = 1
    for m in range(1, n):
        t = _next(t, m)
    return Fraction(t)


def tutte_series(N: int) -> Series:
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    cs = [0] * (N + 1)
    t = 1
    for n in range(1, N + 1):
        cs[n] = t
        t = _next(t, n)
    return Series(cs, N)


def ratio_A(r: int, n: int) -> Fraction:
    """[x^n] g^r / [x^n] g."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    return coeff_of(series_pow(tutte_series(n), r), n) / tutte_coeff(n)


def ratio_A_table(r: int, n_max: int) -> list[Fraction]:
    """A_r(1..n_max) from a single power of the truncated series."""
    g = tutte_series(n_max)
    gr = series_pow(g, r)
    return [gr.coeffs[n] / g.coeffs[n] for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class RatioReport:
    r: int
    n: int
    ratio: Fraction
    formula: RatFun | None = None
    limit: Fraction | None = None


class NoFormulaFound(ArithmeticError):
    pass


def degree_cap(r: int) -> int:
    """Degree search cap for A_r: 12, raised so it covers 3(r - 1)."""
    return max(12, 3 * r)


def closed_form_A(r: int, sample_count: int | None = None, cfg: GuessConfig | None = None) -> RatioReport:
    """Guess A_r(n) as a rational function of n and confirm it on a held-out window."""
    if cfg is None:
        cfg = GuessConfig(max_order=0, max_poly_degree=degree_cap(r))
    if sample_count is None:
        sample_count = 2 * (cfg.max_poly_degree + 1) + cfg.overdetermination_margin + cfg.holdout
    extra = 20
    values = ratio_A_table(r, sample_count + extra)
    samples = list(zip(range(1, sample_count + 1), values[:sample_count]))
    f = guess_ratfun_of_n(samples, cfg)
    if f is None:
        raise NoFormulaFound(f"no rational function found for r = {r} within degree {cfg.max_poly_degree}")
    for n in range(sample_count + 1, sample_count + extra + 1):
        if f(n) != values[n - 1]:
            raise NoFormulaFound(f"guessed formula for r = {r} fails at n = {n}")
    last = sample_count + extra
    return RatioReport(r, last, values[-1], f, f.limit_at_infinity())


def limit_B(r: int) -> Fraction:
    return closed_form_A(r).limit


def decimal_sig(x: Fraction, digits: int) -> str:
    """Fixed-point rendering with ``digits`` significant digits, round-half-even."""
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(d, "f")


# ---------------------------------------------------------------------------
# the quartic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuarticEquation:
    P: BiPoly


def quartic() -> QuarticEquation:
    return QuarticEquation(parse_expr(QUARTIC, ("x", "y")).canonical())


def eval_quartic_at(x0) -> list[Fraction]:
    """Rational roots y of P(x0, y) = 0."""
    p = quartic().P.eval_x(Fraction(x0))
    if p.is_zero():
        raise ValueError("P(x0, y) vanishes identically")
    return rational_roots(p)


def partial_sum_float(x0: float, terms: int) -> float:
    """sum_{n=1}^{terms} t(n) x0^n in floating point, via the term ratio."""
    total = 0.0
    term = x0  # t(1) x0
    for n in range(1, terms + 1):
        total += term
        term *= x0 * (4 * n + 5) * (4 * n + 4) * (4 * n + 3) * (4 * n + 2) / (
            (n + 2) * (3 * n + 5) * (3 * n + 4) * (3 * n + 3))
    return total


@dataclass(frozen=True)
class CritiqueReport:
    jr_value: float
    closed_form: float
    c_value: float
    verdict: str


def critique_check() -> CritiqueReport:
    A = 5 / 27
    B = 16 / 27 * math.sqrt(3 / (2 * math.pi))
    jr = 27 / 2 * math.sqrt(3 / 2) * A * B
    c = float(Fraction(10, 27))
    verdict = ("JR value exceeds 1 and is irrational-valued expression; exact constant is 10/27"
               if jr > 1 and abs(jr - c) > 1e-9 else "inconclusive")
    return CritiqueReport(jr, 20 / (9 * math.sqrt(math.pi)), c, verdict)


# ---------------------------------------------------------------------------
# the convolution sum behind [x^n] g^2
# ---------------------------------------------------------------------------

def _rho(arg: str) -> str:
    return "(" + TERM_RATIO.replace("k", f"({arg})") + ")"


def convolution_term() -> HyperTerm2:
    """F(n, k) = t(k) t(n - k), zero outside 1 <= k <= n - 1, F(2, 1) = 1."""
    ratio_k = parse_ratfun(f"{_rho('k')}/{_rho('n-k-1')}", ("n", "k"))
    ratio_n = parse_ratfun(_rho("n-k"), ("n", "k"))
    return HyperTerm2(ratio_n, ratio_k, Support((0, 1), (1, -1)), (2, 1, Fraction(1)))
