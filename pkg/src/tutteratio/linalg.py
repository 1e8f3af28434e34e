"""Exact linear solving over Q (integer kernel) and over Q(n) (generic field)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from . import kernels
from .poly import RatFun, level_of


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear_exact`.

    ``particular`` is None for homogeneous systems and for inconsistent ones.
    """

    consistent: bool
    particular: list | None
    nullspace: list[list] = field(default_factory=list)
    rank: int = 0


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def solve_linear_exact(matrix: Sequence[Sequence], rhs: Sequence | None = None) -> LinearSolution:
    """Solve ``matrix @ x = rhs`` exactly; ``rhs=None`` means homogeneous.

    Entries may be ints/Fractions (fraction-free integer elimination) or
    rational functions (Gauss-Jordan over Q(n)).
    """
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")
    if rhs is not None and len(rhs) != len(rows):
        raise ValueError(f"rhs has length {len(rhs)}, matrix has {len(rows)} rows")
    if ncols == 0:
        return LinearSolution(True, [] if rhs is not None else None, [], 0)
    entries = [x for r in rows for x in r] + list(rhs or [])
    if all(_is_rational(x) for x in entries):
        return _solve_rational(rows, rhs, ncols)
    return _solve_field(rows, rhs, ncols)


def _solve_rational(rows, rhs, ncols) -> LinearSolution:
    aug = [r + [rhs[i]] for i, r in enumerate(rows)] if rhs is not None else rows
    int_rows = []
    for r in aug:
        d = reduce(lcm, (Fraction(x).denominator for x in r), 1)
        ints = [int(Fraction(x) * d) for x in r]
        g = reduce(gcd, ints, 0)
        int_rows.append([v // g for v in ints] if g > 1 else ints)
    red, pivots = kernels.ff_gauss_jordan(int_rows, ncols)
    rank = len(pivots)
    if rhs is not None and any(red[i][ncols] for i in range(rank, len(red))):
        return LinearSolution(False, None, _nullspace_int(red, pivots, ncols), rank)
    null = _nullspace_int(red, pivots, ncols)
    particular = None
    if rhs is not None:
        particular = [Fraction(0)] * ncols
        if rank:
            D = red[0][pivots[0]]
            for i, c in enumerate(pivots):
                particular[c] = Fraction(red[i][ncols], D)
    return LinearSolution(True, particular, null, rank)


def _nullspace_int(red, pivots, ncols) -> list[list[Fraction]]:
    rank = len(pivots)
    D = red[0][pivots[0]] if rank else 1
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = D
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        g = reduce(gcd, v, 0)
        if D < 0:
            g = -g
        basis.append([Fraction(x // g) for x in v])
    return basis


def _size(x) -> int:
    if isinstance(x, RatFun):
        return x.num.degree + x.den.degree
    return 0


def _solve_field(rows, rhs, ncols) -> LinearSolution:
    lvl = max(level_of(x) for r in rows for x in r)
    one = RatFun(1, level=lvl) if lvl else Fraction(1)
    m = [[x * one for x in r] + ([rhs[i] * one] if rhs is not None else []) for i, r in enumerate(rows)]
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        cands = [i for i in range(r, nrows) if m[i][c] != 0]
        if not cands:
            continue
        best = min(cands, key=lambda i: _size(m[i][c]))
        m[r], m[best] = m[best], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    rank = len(pivots)
    pivset = set(pivots)
    null = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [one * 0 for _ in range(ncols)]
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        null.append(v)
    if rhs is not None:
        if any(m[i][ncols] != 0 for i in range(rank, nrows)):
            return LinearSolution(False, None, null, rank)
        particular = [one * 0 for _ in range(ncols)]
        for i, c in enumerate(pivots):
            particular[c] = m[i][ncols]
        return LinearSolution(True, particular, null, rank)
    return LinearSolution(True, None, null, rank)
