"""Pure-Python versions of the integer kernels.

Semantics are identical to the compiled ``_ckernels`` module; see
:mod:`tutteratio.kernels` for the contracts.
"""

from __future__ import annotations


def convolve(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    nz_b = [(j, y) for j, y in enumerate(b[: n + 1]) if y]
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        lim = n - i
        for j, y in nz_b:
            if j > lim:
                break
            out[i + j] += x * y
    return out


def ff_gauss_jordan(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_bits = 0
        for i in range(r, nrows):
            v = m[i][c]
            if v:
                bits = v.bit_length() if v > 0 else (-v).bit_length()
                if best < 0 or bits < best_bits:
                    best, best_bits = i, bits
        if best < 0:
            continue
        m[r], m[best] = m[best], m[r]
        prow = m[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if a:
                if prev == 1:
                    m[i] = [piv * x - a * y for x, y in zip(row, prow)]
                else:
                    m[i] = [(piv * x - a * y) // prev for x, y in zip(row, prow)]
            elif prev == 1:
                m[i] = [piv * x for x in row]
            else:
                m[i] = [piv * x // prev for x in row]
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots
