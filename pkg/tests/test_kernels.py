import importlib
import random

import pytest
from hypothesis import given, strategies as st

from tutteratio import _pykernels, kernels

try:
    _ck = importlib.import_module("tutteratio._ckernels")
except ImportError:  # pragma: no cover
    _ck = None

needs_c = pytest.mark.skipif(_ck is None, reason="compiled kernels not built")
ints = st.integers(-(10**30), 10**30)


def test_backend_selected():
    assert kernels.BACKEND in ("gmp", "python")
    if _ck is not None and kernels.BACKEND == "gmp":
        assert kernels.convolve is _ck.convolve


def test_convolve_small():
    assert _pykernels.convolve([0, 1, 3], [0, 1, 3], 3) == [0, 0, 1, 6]


@needs_c
@given(st.lists(ints, min_size=1, max_size=30), st.lists(ints, min_size=1, max_size=30), st.integers(0, 40))
def test_convolve_twins_agree(a, b, n):
    a = (a + [0] * 41)[: n + 1]
    b = (b + [0] * 41)[: n + 1]
    assert _ck.convolve(a, b, n) == _pykernels.convolve(a, b, n)


def _fraction_rank(rows):
    from fractions import Fraction
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


@needs_c
@pytest.mark.parametrize("seed", range(25))
def test_gauss_jordan_twins_agree(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 9), rng.randint(1, 9)
    big = rng.choice([3, 10**6, 10**40])
    rows = [[rng.randint(-big, big) if rng.random() < 0.8 else 0 for _ in range(c)] for _ in range(r)]
    if rng.random() < 0.3 and r > 1:
        rows[-1] = [2 * x - y for x, y in zip(rows[0], rows[1 % r])]
    py = _pykernels.ff_gauss_jordan([list(x) for x in rows], c)
    cc = _ck.ff_gauss_jordan([list(x) for x in rows], c)
    assert py == cc
    assert len(py[1]) == _fraction_rank(rows)


def test_gauss_jordan_reduced_form():
    red, piv = _pykernels.ff_gauss_jordan([[2, 4, 6], [1, 3, 5]], 2)
    assert piv == [0, 1]
    D = red[0][0]
    assert red[1][1] == D and red[0][1] == 0 and red[1][0] == 0
    # x = red[i][2] / D solves 2x + 4y = 6, x + 3y = 5
    xs, ys = red[0][2] / D, red[1][2] / D
    assert 2 * xs + 4 * ys == 6 and xs + 3 * ys == 5
