"""Parser for the polynomial / rational-function expression grammar.

Grammar (whitespace insignificant, implicit multiplication rejected)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

``p/q`` literals are just integer division.  ``parse_expr`` only allows
division by nonzero constants; ``parse_ratfun`` allows any nonzero divisor.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .bipoly import BiPoly
from .poly import Poly, RatFun


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")

# sparse multivariate polynomial: {exponent tuple: Fraction}
Sparse = dict


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos and m.group(0) == "":
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
        if pos >= len(text) or text[pos:].strip() == "":
            break
    tokens.append(("end", None, len(text)))
    return tokens


def _add(a: Sparse, b: Sparse, sign: int = 1) -> Sparse:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _mul(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], allow_ratfun: bool):
        self.text = text
        self.vars = list(variables)
        self.nv = len(self.vars)
        self.allow_ratfun = allow_ratfun
        self.tokens = _tokenize(text)
        self.i = 0

    def const(self, c) -> tuple[Sparse, Sparse]:
        c = Fraction(c)
        zero = (0,) * self.nv
        return ({zero: c} if c else {}), {zero: Fraction(1)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return val

    def expr(self):
        num, den = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            n2, d2 = self.term()
            if den == d2:
                num = _add(num, n2, sign)
            else:
                num, den = _add(_mul(num, d2), _mul(n2, den), sign), _mul(den, d2)
        return num, den

    def term(self):
        num, den = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            n2, d2 = self.unary()
            if op[1] == "*":
                num, den = _mul(num, n2), _mul(den, d2)
            else:
                if not n2:
                    self.fail("division by zero", op)
                if not self.allow_ratfun and any(any(k) for k in n2):
                    self.fail("division by a non-constant", op)
                num, den = _mul(num, d2), _mul(den, n2)
        return num, den

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            num, den = self.unary()
            return {k: -c for k, c in num.items()}, den
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        num, den = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", tok)
            rn, rd = self.const(1)
            for _ in range(tok[1]):
                rn, rd = _mul(rn, num), _mul(rd, den)
            num, den = rn, rd
        return num, den

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            nxt = self.peek()
            if nxt[0] in ("int", "name") or nxt[:2] == ("op", "("):
                self.fail("implicit multiplication is not allowed", nxt)
            return self.const(val)
        if kind == "name":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
            exps = tuple(1 if v == val else 0 for v in self.vars)
            nxt = self.peek()
            if nxt[0] in ("int", "name") or nxt[:2] == ("op", "("):
                self.fail("implicit multiplication is not allowed", nxt)
            return {exps: Fraction(1)}, self.const(1)[1]
        if (kind, val) == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.fail("expected ')'", close)
            nxt = self.peek()
            if nxt[0] in ("int", "name") or nxt[:2] == ("op", "("):
                self.fail("implicit multiplication is not allowed", nxt)
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {val!r}", tok)


def _to_object(sp: Sparse, nv: int):
    if nv == 0:
        return sp.get((), Fraction(0))
    if nv == 1:
        deg = max((k[0] for k in sp), default=-1)
        cs = [Fraction(0)] * (deg + 1)
        for (i,), c in sp.items():
            cs[i] = c
        return Poly(cs)
    if nv == 2:
        return BiPoly(sp)
    raise ValueError("at most two variables are supported")


def parse_expr(text: str, variables: Sequence[str] = ()):
    """Parse to a Fraction (no variables), Poly (one) or BiPoly (two)."""
    p = _Parser(text, variables, allow_ratfun=False)
    num, den = p.parse()
    c = den[(0,) * p.nv]
    return _to_object({k: v / c for k, v in num.items()}, p.nv)


def _sparse_to_level2(sp: Sparse) -> Poly:
    """Sparse poly in (outer, inner) -> Poly in inner over Q(outer)."""
    by_inner: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in sp.items():
        by_inner.setdefault(j, {})[i] = c
    deg = max(by_inner, default=-1)
    coeffs = []
    for j in range(deg + 1):
        row = by_inner.get(j, {})
        d = max(row, default=-1)
        coeffs.append(RatFun(Poly([row.get(i, 0) for i in range(d + 1)])))
    return Poly(coeffs, level=2)


def parse_ratfun(text: str, variables: Sequence[str] = ("n",)) -> RatFun:
    """Parse a rational function.

    With one variable the result lives in Q(v); with two variables
    ``(outer, inner)`` it is a rational function of ``inner`` over Q(outer).
    """
    p = _Parser(text, variables, allow_ratfun=True)
    num, den = p.parse()
    if p.nv == 1:
        return RatFun(_to_object(num, 1), _to_object(den, 1))
    if p.nv == 2:
        return RatFun(_sparse_to_level2(num), _sparse_to_level2(den))
    raise ValueError("parse_ratfun needs one or two variables")


def poly_to_bipoly_n(p: Poly) -> BiPoly:
    """Level-1 Poly in n, viewed as a BiPoly in (n, k)."""
    return BiPoly({(i, 0): c for i, c in enumerate(p.coeffs)})
