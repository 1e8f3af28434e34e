"""Algebraic equation -> linear ODE -> coefficient recurrence, and recurrence utilities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .bipoly import BiPoly
from .linalg import solve_linear_exact
from .poly import Poly, RatFun, clear_denominators, poly_xgcd, squarefree_part
from .series import Series, poly_times_series


class DegenerateEquation(ValueError):
    pass


class RecurrenceError(ValueError):
    pass


def _normalize_polys(polys: Sequence[Poly]) -> tuple[Poly, ...]:
    """Integer-cleared, content-free, leading polynomial with positive leading coefficient."""
    nz = [p for p in polys if p]
    if not nz:
        return tuple(polys)
    d = reduce(lcm, (p.denominator_lcm() for p in nz), 1)
    flat = [int(c * d) for p in nz for c in p.coeffs]
    g = reduce(gcd, flat, 0)
    if nz[-1].lc < 0:
        g = -g
    f = Fraction(d, g)
    return tuple(p * f for p in polys)


def falling_factorial(base: Poly, j: int) -> Poly:
    """base (base - 1) ... (base - j + 1)."""
    out = base.one()
    for t in range(j):
        out = out * (base - t)
    return out


@dataclass(frozen=True)
class LinearODE:
    """sum_j coeffs[j](x) * y^(j)(x) = 0."""

    coeffs: tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def normalized(self) -> "LinearODE":
        cs = list(self.coeffs)
        while cs and not cs[-1]:
            cs.pop()
        return LinearODE(_normalize_polys(cs))

    def apply(self, s: Series) -> Series:
        """Residual sum_j c_j * s^(j), valid up to order s.order - self.order."""
        top = s.order - self.order
        if top < 0:
            raise ValueError("series too short for this ODE")
        acc = Series.zero(top)
        d = s
        for j, c in enumerate(self.coeffs):
            if j:
                d = d.derivative()
            acc = acc + poly_times_series(c, d.truncate(top))
        return acc

    def __str__(self) -> str:
        from .printing import poly_to_str

        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({poly_to_str(c, 'x')})*D^{j}(y)" if j else f"({poly_to_str(c, 'x')})*y")
        return " + ".join(parts) + " = 0"


@dataclass(frozen=True)
class Recurrence:
    """sum_i coeffs[i](n) * a(n + i) = 0 for n >= valid_from."""

    coeffs: tuple[Poly, ...]
    valid_from: int = 0

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def normalized(self) -> "Recurrence":
        cs = list(self.coeffs)
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            raise RecurrenceError("zero recurrence")
        z = 0
        while not cs[z]:
            z += 1
        start = self.valid_from
        if z:
            # reindex m = n + z so the trailing coefficient is nonzero
            cs = [p.shift(-z) for p in cs[z:]]
            start += z
        return Recurrence(_normalize_polys(cs), start)

    def residual(self, seq, n: int, offset: int = 0) -> Fraction:
        return sum((p(n) * seq[n + i - offset] for i, p in enumerate(self.coeffs) if p), Fraction(0))

    def __str__(self) -> str:
        from .printing import poly_to_str

        parts = []
        for i, p in enumerate(self.coeffs):
            if p:
                shift = "n" if i == 0 else f"n+{i}"
                parts.append(f"({poly_to_str(p, 'n')})*a({shift})")
        return " + ".join(parts) + " = 0"

    def to_json(self) -> dict:
        from .printing import poly_to_str

        return {"coefficients": [poly_to_str(p, "n") for p in self.coeffs], "valid_from": self.valid_from}


def compose_operators(M: Recurrence, L: Recurrence) -> Recurrence:
    """The operator M(L(a)): sum_j m_j(n) E^j applied after sum_i p_i(n) E^i."""
    out = [Poly([]) for _ in range(M.order + L.order + 1)]
    for j, m in enumerate(M.coeffs):
        if not m:
            continue
        for i, p in enumerate(L.coeffs):
            if p:
                out[i + j] = out[i + j] + m * p.shift(j)
    return Recurrence(tuple(out), max(M.valid_from, L.valid_from)).normalized()


# ---------------------------------------------------------------------------
# algebraic equation -> ODE
# ---------------------------------------------------------------------------

def _dx(c):
    return c.derivative() if isinstance(c, RatFun) else Fraction(0)


class _AlgebraicContext:
    """Arithmetic in Q(x)[y]/(F) with the derivation d/dx extended by y' = -F_x/F_y."""

    def __init__(self, P: BiPoly):
        if P.is_zero() or P.degree_y < 1:
            raise DegenerateEquation("equation must have positive degree in y")
        F = squarefree_part(P.as_poly_over_ratfun())
        if F.degree < 1:
            raise DegenerateEquation("squarefree part has degree 0 in y")
        g, s, _ = poly_xgcd(F.derivative() % F, F)
        if g.degree != 0:
            raise DegenerateEquation("degenerate equation: P_y is not invertible modulo P")
        Fx = F.map_coeffs(_dx)
        self.F = F
        self.yprime = (-(Fx * s)) % F

    @property
    def dim(self) -> int:
        return self.F.degree

    def D(self, a: Poly) -> Poly:
        return (a.map_coeffs(_dx) + a.derivative() * self.yprime) % self.F

    def vectors(self, count: int) -> list[list]:
        """Coordinates of y, y', ..., y^(count-1) over the basis 1, y, ..., y^(d-1)."""
        cur = Poly.var(level=2) % self.F
        out = []
        for _ in range(count):
            out.append([cur.coeff(i) for i in range(self.dim)])
            cur = self.D(cur)
        return out


def derivative_vectors(P: BiPoly, count: int) -> list[list]:
    return _AlgebraicContext(P).vectors(count)


def _dependence(vecs: list[list]):
    m = [[v[i] for v in vecs] for i in range(len(vecs[0]))]
    return solve_linear_exact(m).nullspace


def algeq_to_ode(P: BiPoly) -> LinearODE:
    """Minimal-order homogeneous linear ODE annihilating every root of P(x, y) = 0."""
    ctx = _AlgebraicContext(P)
    vecs = ctx.vectors(ctx.dim + 1)
    for k in range(ctx.dim + 1):
        null = _dependence(vecs[: k + 1])
        if null:
            coeffs = [c if isinstance(c, RatFun) else RatFun(Poly([c])) for c in null[0]]
            polys, _ = clear_denominators(coeffs)
            return LinearODE(tuple(polys)).normalized()
    raise DegenerateEquation("no linear dependence found")  # unreachable for d-dimensional space


# ---------------------------------------------------------------------------
# ODE -> recurrence
# ---------------------------------------------------------------------------

def ode_to_rec(ode: LinearODE) -> Recurrence:
    """Coefficient recurrence of the power-series solutions of ``ode``.

    x^i y^(j) contributes (n-i+j)(n-i+j-1)...(n-i+1) a(n-i+j) to [x^n];
    shifts are re-indexed so the smallest is 0.
    """
    terms = [(j, i, c) for j, cj in enumerate(ode.coeffs) for i, c in enumerate(cj.coeffs) if c]
    if not terms:
        raise RecurrenceError("zero ODE")
    low = min(j - i for j, i, _ in terms)
    high = max(j - i for j, i, _ in terms)
    n = Poly.var()
    p = [Poly([]) for _ in range(high - low + 1)]
    for j, i, c in terms:
        s = j - i - low
        p[s] = p[s] + falling_factorial(n + s, j) * c
    return Recurrence(tuple(p), 0).normalized()


def hyperterm_to_rec(ratio: RatFun) -> Recurrence:
    """First-order recurrence den(n) a(n+1) - num(n) a(n) = 0 for a(n+1)/a(n) = ratio."""
    if ratio.is_zero():
        raise ValueError("ratio must be nonzero")
    return Recurrence((-ratio.num, ratio.den)).normalized()


@dataclass(frozen=True)
class RecCheck:
    ok: bool
    first_failure: int | None
    checked_from: int
    checked_to: int

    def __str__(self) -> str:
        if self.ok:
            return f"all zero for {self.checked_from} <= n <= {self.checked_to}"
        return f"fails at n = {self.first_failure}"


def rec_check(rec: Recurrence, seq: Sequence, start: int = 0, offset: int = 0) -> RecCheck:
    """Evaluate the recurrence on ``seq`` (seq[i] = a(offset + i)) for every admissible n."""
    n0 = max(start, rec.valid_from, offset)
    last = offset + len(seq) - 1 - rec.order
    if last < n0:
        raise ValueError("recurrence window is longer than the sequence")
    for n in range(n0, last + 1):
        if rec.residual(seq, n, offset) != 0:
            return RecCheck(False, n, n0, last)
    return RecCheck(True, None, n0, last)


def rec_unroll(rec: Recurrence, initial: Sequence, count: int, start: int | None = None) -> list[Fraction]:
    """Extend ``initial`` = a(start .. start+order-1) to ``count`` terms."""
    if start is None:
        start = rec.valid_from
    if start < rec.valid_from:
        raise RecurrenceError(f"start {start} below valid_from {rec.valid_from}")
    d = rec.order
    if len(initial) < d:
        raise RecurrenceError(f"need {d} initial values, got {len(initial)}")
    out = [Fraction(v) for v in initial]
    lead = rec.coeffs[-1]
    n = start + len(out) - d
    while len(out) < count:
        lc = lead(n)
        if lc == 0:
            raise RecurrenceError(f"leading coefficient vanishes at n = {n}")
        acc = sum((rec.coeffs[i](n) * out[n - start + i] for i in range(d) if rec.coeffs[i]), Fraction(0))
        out.append(-acc / lc)
        n += 1
    return out[:count]
