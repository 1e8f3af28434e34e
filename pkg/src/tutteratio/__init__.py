"""Exact series, guessing, holonomic and telescoping tools around the triangulation series g(x)."""

from .bipoly import BiPoly
from .guess import GuessConfig, guess_algeq, guess_ratfun_of_n, guess_recurrence
from .holonomic import LinearODE, Recurrence, algeq_to_ode, hyperterm_to_rec, ode_to_rec, rec_check, rec_unroll
from .kernels import BACKEND
from .linalg import solve_linear_exact
from .parse import ParseError, parse_expr, parse_ratfun
from .poly import PoleError, Poly, RatFun, poly_gcd, ratfun_eval
from .series import Series, coeff_of, series_add, series_mul, series_pow
from .telescope import Certificate, HyperTerm1, HyperTerm2, Support, gosper, numeric_sum_check, verify_certificate, zeilberger
from .tutte import (
    closed_form_A,
    critique_check,
    eval_quartic_at,
    limit_B,
    quartic,
    ratio_A,
    tutte_coeff,
    tutte_series,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "GuessConfig",
    "guess_algeq",
    "guess_ratfun_of_n",
    "guess_recurrence",
    "LinearODE",
    "Recurrence",
    "algeq_to_ode",
    "hyperterm_to_rec",
    "ode_to_rec",
    "rec_check",
    "rec_unroll",
    "BACKEND",
    "solve_linear_exact",
    "ParseError",
    "parse_expr",
    "parse_ratfun",
    "PoleError",
    "Poly",
    "RatFun",
    "poly_gcd",
    "ratfun_eval",
    "Series",
    "coeff_of",
    "series_add",
    "series_mul",
    "series_pow",
    "Certificate",
    "HyperTerm1",
    "HyperTerm2",
    "Support",
    "gosper",
    "numeric_sum_check",
    "verify_certificate",
    "zeilberger",
    "closed_form_A",
    "critique_check",
    "eval_quartic_at",
    "limit_B",
    "quartic",
    "ratio_A",
    "tutte_coeff",
    "tutte_series",
]
