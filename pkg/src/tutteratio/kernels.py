"""Integer kernels behind series multiplication and exact linear solving.

Two implementations share one contract:

``convolve(a, b, n)``
    Truncated Cauchy product of two integer lists, length ``n + 1``.

``ff_gauss_jordan(rows, ncols)``
    Fraction-free Gauss-Jordan elimination of an integer matrix.  Pivots are
    searched only in the first ``ncols`` columns (extra columns ride along,
    e.g. a right-hand side), choosing the nonzero entry of smallest bit length.
    Returns ``(rows, pivots)``: the first ``len(pivots)`` rows are the pivot
    rows, each holding the same nonzero value ``D`` at its pivot column and
    zeros at every other pivot column.  Remaining rows vanish on the first
    ``ncols`` columns.

The compiled GMP version is used when it imports; set ``TUTTERATIO_PURE=1``
to force the pure-Python one.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("TUTTERATIO_PURE", "") not in ("", "0"):
    convolve = _pykernels.convolve
    ff_gauss_jordan = _pykernels.ff_gauss_jordan
else:
    try:
        from ._ckernels import convolve, ff_gauss_jordan  # type: ignore[no-redef]

        BACKEND = "gmp"
    except ImportError:
        convolve = _pykernels.convolve
        ff_gauss_jordan = _pykernels.ff_gauss_jordan

__all__ = ["BACKEND", "convolve", "ff_gauss_jordan"]
