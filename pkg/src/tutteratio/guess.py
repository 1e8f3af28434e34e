"""Guessing recurrences, rational functions and algebraic equations from exact data.

Every guess is fitted on a leading window and must reproduce all remaining
data; anything that fails the held-out check is discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .bipoly import BiPoly, graded_key
from .holonomic import Recurrence, RecurrenceError
from .linalg import solve_linear_exact
from .poly import Poly, RatFun
from .series import Series, series_mul


@dataclass(frozen=True)
class GuessConfig:
    max_order: int = 4
    max_poly_degree: int = 12
    overdetermination_margin: int = 10
    holdout: int = 20

    def __post_init__(self):
        if min(self.max_order, self.max_poly_degree, self.overdetermination_margin, self.holdout) < 0:
            raise ValueError("guess parameters must be nonnegative")
        if self.overdetermination_margin < 1:
            raise ValueError("overdetermination margin must be at least 1")


def _fit(rows: list[list], unknowns: int, cfg: GuessConfig, accept: Callable[[list], bool]):
    """Fit on a leading window, widening it while the kernel is ambiguous.

    Returns the first kernel vector accepted by ``accept`` (which checks all
    data), or None.
    """
    window = unknowns + cfg.overdetermination_margin
    if len(rows) - window < cfg.holdout:
        return None
    while True:
        null = solve_linear_exact(rows[:window]).nullspace
        if not null:
            return None
        if len(null) == 1 or len(rows) - window - cfg.overdetermination_margin < cfg.holdout:
            for v in sorted(null, key=_support_key):
                if accept(v):
                    return v
            return None
        window += cfg.overdetermination_margin


def _support_key(v: list) -> tuple[int, int]:
    nz = [i for i, x in enumerate(v) if x != 0]
    return (len(nz), max(nz, default=-1))


# ---------------------------------------------------------------------------

def guess_recurrence(seq: Sequence, cfg: GuessConfig = GuessConfig(), offset: int = 0) -> Recurrence | None:
    """Smallest P-recursive recurrence for seq (seq[i] = a(offset + i)).

    Cells are searched by order + degree, then by order.
    """
    seq = [Fraction(x) for x in seq]
    L = len(seq)
    for total in range(1, cfg.max_order + cfg.max_poly_degree + 1):
        for order in range(1, min(total, cfg.max_order) + 1):
            deg = total - order
            if deg > cfg.max_poly_degree:
                continue
            ns = range(offset, offset + L - order)
            rows = [[Fraction(n) ** e * seq[n - offset + i] for i in range(order + 1) for e in range(deg + 1)]
                    for n in ns]
            unknowns = (order + 1) * (deg + 1)

            def build(v, order=order, deg=deg):
                return Recurrence(tuple(Poly(v[i * (deg + 1):(i + 1) * (deg + 1)]) for i in range(order + 1)))

            def accept(v, build=build):
                rec = build(v)
                if not rec.coeffs[-1] or not rec.coeffs[0]:
                    return False
                return all(rec.residual(seq, n, offset) == 0 for n in ns)

            v = _fit(rows, unknowns, cfg, accept)
            if v is not None:
                try:
                    return build(v).normalized()
                except RecurrenceError:
                    continue
    return None


def guess_ratfun_of_n(samples: Sequence[tuple[int, object]], cfg: GuessConfig = GuessConfig()) -> RatFun | None:
    """Minimal-degree u/v with u(n_i) = value_i v(n_i) on every sample."""
    pts = [(Fraction(n), Fraction(v)) for n, v in samples]
    for d in range(cfg.max_poly_degree + 1):
        powers = [[n ** e for e in range(d + 1)] for n, _ in pts]
        rows = [pw + [-val * x for x in pw] for pw, (_, val) in zip(powers, pts)]

        def accept(v, d=d):
            u, w = Poly(v[: d + 1]), Poly(v[d + 1:])
            if w.is_zero():
                return False
            for n, val in pts:
                wn = w(n)
                if wn == 0 or u(n) != val * wn:
                    return False
            return True

        v = _fit(rows, 2 * (d + 1), cfg, accept)
        if v is not None:
            return RatFun(Poly(v[: d + 1]), Poly(v[d + 1:]))
    return None


def guess_algeq(series: Series, deg_y: int, deg_x: int, cfg: GuessConfig = GuessConfig()) -> BiPoly | None:
    """Nonzero P(x, y) with deg_y, deg_x bounds and P(x, series) = 0 to the full order."""
    N = series.order
    powers = [Series.one(N)]
    for _ in range(deg_y):
        powers.append(series_mul(powers[-1], series))
    keys = [(i, j) for j in range(deg_y + 1) for i in range(deg_x + 1)]
    rows = []
    for m in range(N + 1):
        rows.append([powers[j].coeffs[m - i] if m >= i else Fraction(0) for i, j in keys])

    def accept(v):
        return all(sum((c * x for c, x in zip(v, row) if c), Fraction(0)) == 0 for row in rows)

    v = _fit_algeq(rows, len(keys), cfg, accept, keys)
    if v is None:
        return None
    return BiPoly({k: c for k, c in zip(keys, v)}).canonical()


def _fit_algeq(rows, unknowns, cfg, accept, keys):
    window = unknowns + cfg.overdetermination_margin
    if len(rows) - window < cfg.holdout:
        return None
    null = solve_linear_exact(rows[:window]).nullspace
    while len(null) > 1 and len(rows) - window - cfg.overdetermination_margin >= cfg.holdout:
        window += cfg.overdetermination_margin
        null = solve_linear_exact(rows[:window]).nullspace
    good = [v for v in null if accept(v)]
    if not good:
        return None

    def rank(v):
        nz = [keys[i] for i, c in enumerate(v) if c != 0]
        return (len(nz), graded_key(max(nz, key=graded_key)))

    return min(good, key=rank)
