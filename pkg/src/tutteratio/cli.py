"""Command-line interface: ``tutteratio <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import acceptance
from .acceptance import Item
from .guess import GuessConfig, guess_algeq
from .holonomic import LinearODE, algeq_to_ode, ode_to_rec
from .parse import ParseError, parse_expr
from .poly import Poly
from .printing import bipoly_to_str, poly_to_str, ratfun_to_str
from .series import coeff_of, series_pow
from .telescope import binomial_term, natural_support, numeric_sum_check, verify_certificate, zeilberger
from .tutte import (
    closed_form_A,
    convolution_term,
    critique_check,
    decimal_sig,
    eval_quartic_at,
    partial_sum_float,
    quartic,
    ratio_A,
    tutte_coeff,
    tutte_series,
)


class Report:
    def __init__(self, command: str):
        self.command = command
        self.items: list[Item] = []
        self.value_only = True

    def value(self, name: str, actual: str):
        self.items.append(Item(name, "", actual, True))

    def check(self, item: Item):
        self.value_only = False
        self.items.append(item)

    @property
    def status(self) -> str:
        if self.value_only:
            return "value"
        return "pass" if all(i.passed for i in self.items) else "fail"


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _positive(lo: int):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return v
    return conv


# ---------------------------------------------------------------------------
# commands

def cmd_verify_all(args, rep: Report):
    for c, title in acceptance.CRITERIA.items():
        for item in acceptance.run_criterion(c, args.max_n, args.max_r):
            rep.check(Item(f"[{c} {title}] {item.name}", item.expected, item.actual, item.passed))


def cmd_table(args, rep: Report):
    for r in range(2, args.max_r + 1):
        B = closed_form_A(r).limit
        rep.value(f"B_{r}", f"{B}, {decimal_sig(B, args.decimals)}")


def cmd_coeff(args, rep):
    rep.value(f"t({args.n})", str(tutte_coeff(args.n)))


def cmd_power_coeff(args, rep):
    rep.value(f"[x^{args.n}] g^{args.r}", str(coeff_of(series_pow(tutte_series(args.n), args.r), args.n)))


def cmd_ratio(args, rep):
    rep.value(f"A_{args.r}({args.n})", str(ratio_A(args.r, args.n)))


def cmd_closed_form(args, rep):
    res = closed_form_A(args.r, args.samples)
    rep.value(f"A_{args.r}(n)", ratfun_to_str(res.formula, "n"))
    rep.value(f"B_{args.r}", str(res.limit))


def cmd_limit(args, rep):
    rep.value(f"B_{args.r}", str(closed_form_A(args.r).limit))


def cmd_guess_algeq(args, rep):
    cfg = GuessConfig(overdetermination_margin=args.margin, holdout=args.holdout)
    P = guess_algeq(tutte_series(args.order), args.deg_y, args.deg_x, cfg)
    rep.value("P(x, y)", "none" if P is None else bipoly_to_str(P, ("x", "y")))


def _equation(args):
    if args.P is None:
        return quartic().P
    return parse_expr(args.P, ("x", "y"))


def cmd_algeq2ode(args, rep):
    ode = algeq_to_ode(_equation(args))
    rep.value("order", str(ode.order))
    for j, c in enumerate(ode.coeffs):
        rep.value(f"c_{j}(x)", poly_to_str(c, "x"))


def cmd_ode2rec(args, rep):
    if args.coeffs:
        ode = LinearODE(tuple(Poly.const(0) + parse_expr(c, ("x",)) for c in args.coeffs.split(";")))
    else:
        ode = algeq_to_ode(_equation(args))
    rec = ode_to_rec(ode)
    rep.value("order", str(rec.order))
    for i, p in enumerate(rec.coeffs):
        rep.value(f"p_{i}(n)", poly_to_str(p, "n"))
    rep.value("valid_from", str(rec.valid_from))


def cmd_zeilberger(args, rep):
    term = convolution_term() if args.term == "tutte" else binomial_term()
    cert = zeilberger(term, args.max_order)
    if cert is None:
        rep.check(Item("telescoper", f"order <= {args.max_order}", "none", False))
        return
    rep.value("order", str(cert.operator.order))
    for i, p in enumerate(cert.operator.coeffs):
        rep.value(f"p_{i}(n)", poly_to_str(p, "n"))
    rep.value("R(n, k)", ratfun_to_str(cert.R, "k", "n"))
    ok = verify_certificate(term, cert)
    rep.check(Item("verify_certificate", "True", str(ok), ok))
    if args.check_to:
        lo = 3 if args.term == "tutte" else 0
        for label, t in (("declared support", term), ("natural support", natural_support(term))):
            chk = numeric_sum_check(t, cert.operator, (lo, args.check_to))
            rep.check(Item(f"sum over {label}, {lo} <= n <= {args.check_to}", "all zero", str(chk), chk.ok))


def cmd_eval_quartic(args, rep):
    roots = eval_quartic_at(args.x)
    rep.value("rational roots", "[" + ", ".join(str(r) for r in roots) + "]")
    if args.terms:
        rep.value(f"partial sum of {args.terms} terms", repr(partial_sum_float(float(args.x), args.terms)))


def cmd_critique(args, rep):
    r = critique_check()
    rep.value("jr_value", repr(r.jr_value))
    rep.value("20/(9 sqrt(pi))", repr(r.closed_form))
    rep.value("c_value", repr(r.c_value))
    rep.value("verdict", r.verdict)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    common.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 (byte-stable output)")

    p = argparse.ArgumentParser(prog="tutteratio", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("verify-all", cmd_verify_all, "run every acceptance check")
    sp.add_argument("--max-n", type=_positive(10), default=300)
    sp.add_argument("--max-r", type=_positive(2), default=11)
    sp = add("table", cmd_table, "B_r as fractions and decimals")
    sp.add_argument("--max-r", type=_positive(2), default=11)
    sp.add_argument("--decimals", type=_positive(1), default=10)
    sp = add("coeff", cmd_coeff, "t(n)")
    sp.add_argument("--n", type=int, required=True)
    sp = add("power-coeff", cmd_power_coeff, "[x^n] g^r")
    sp.add_argument("--r", type=_positive(1), required=True)
    sp.add_argument("--n", type=_positive(0), required=True)
    sp = add("ratio", cmd_ratio, "A_r(n)")
    sp.add_argument("--r", type=_positive(2), required=True)
    sp.add_argument("--n", type=_positive(1), required=True)
    sp = add("closed-form", cmd_closed_form, "guess A_r(n) as a rational function")
    sp.add_argument("--r", type=_positive(2), required=True)
    sp.add_argument("--samples", type=_positive(1), default=None)
    sp = add("limit", cmd_limit, "B_r")
    sp.add_argument("--r", type=_positive(2), required=True)
    sp = add("guess-algeq", cmd_guess_algeq, "guess P(x, g) = 0 from coefficients")
    sp.add_argument("--order", type=_positive(1), default=60)
    sp.add_argument("--deg-y", type=_positive(1), default=4)
    sp.add_argument("--deg-x", type=_positive(0), default=3)
    sp.add_argument("--margin", type=_positive(1), default=10)
    sp.add_argument("--holdout", type=_positive(0), default=20)
    for name, fn, h in (("algeq2ode", cmd_algeq2ode, "ODE of an algebraic function"),
                        ("ode2rec", cmd_ode2rec, "coefficient recurrence of an ODE")):
        sp = add(name, fn, h)
        sp.add_argument("--P", help="P(x, y) in the expression grammar (default: the quartic)")
    sp.add_argument("--coeffs", help="ODE coefficients c_0;c_1;... as polynomials in x")
    sp = add("zeilberger", cmd_zeilberger, "creative telescoping")
    sp.add_argument("--term", choices=["tutte", "binomial"], default="tutte")
    sp.add_argument("--max-order", type=_positive(0), default=4)
    sp.add_argument("--check-to", type=_positive(3), default=None)
    sp = add("eval-quartic", cmd_eval_quartic, "rational roots of P(x0, y)")
    sp.add_argument("--x", type=_frac, required=True)
    sp.add_argument("--terms", type=_positive(0), default=0)
    add("critique", cmd_critique, "floating-point check of the JR expression")
    return p


def render_text(rep: Report) -> str:
    lines = []
    for it in rep.items:
        if rep.status == "value" or it.expected == "":
            lines.append(f"{it.name}: {it.actual}")
        else:
            mark = "PASS" if it.passed else "FAIL"
            lines.append(f"{mark} {it.name}: {it.actual} (expected {it.expected})")
    if rep.status != "value":
        lines.append(f"status: {rep.status}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.command)
    t0 = time.perf_counter()
    try:
        args.fn(args, rep)
    except (ParseError, ValueError, ArithmeticError) as e:
        parser.error(f"{args.command}: {e}")
    elapsed = 0 if args.no_timing else int((time.perf_counter() - t0) * 1000)
    if args.json:
        text = json.dumps({"command": rep.command, "status": rep.status,
                           "items": [i.to_json() for i in rep.items], "elapsed_ms": elapsed}, indent=2) + "\n"
    else:
        text = render_text(rep)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0 if rep.status in ("pass", "value") else 1


if __name__ == "__main__":
    sys.exit(main())
