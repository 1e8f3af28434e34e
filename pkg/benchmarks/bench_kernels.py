"""Compare the GMP kernels with their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import random
import time

from tutteratio import _pykernels
from tutteratio.tutte import ratio_A_table, tutte_series


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    g = [int(c) for c in tutte_series(1500).coeffs]
    yield "convolve g*g, N=1500", "convolve", (g, g, 1500)
    rng = random.Random(7)
    m = [[rng.randint(-10**12, 10**12) for _ in range(41)] for _ in range(40)]
    yield "gauss-jordan 40x41 random 40-bit", "ff_gauss_jordan", (m, 40)
    # the closed-form system for A_6 at its true degree 15
    vals = ratio_A_table(6, 60)
    rows = []
    for n, v in zip(range(1, 61), vals):
        den = v.denominator
        row = [n ** e * den for e in range(16)] + [-(n ** e) * v.numerator for e in range(16)]
        rows.append(row)
    yield "gauss-jordan A_6 guessing system 60x32", "ff_gauss_jordan", (rows, 32)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        ck = importlib.import_module("tutteratio._ckernels")
    except ImportError:
        ck = None
        print("compiled kernels unavailable; timing the Python twin only")
    print(f"{'case':42s} {'python s':>10s} {'gmp s':>10s} {'speedup':>8s}")
    for name, fn, data in cases():
        def call(mod):
            f = getattr(mod, fn)
            if fn == "ff_gauss_jordan":
                return lambda: f([list(r) for r in data[0]], data[1])
            return lambda: f(*data)
        tp = best_of(call(_pykernels), args.repeat)
        if ck is None:
            print(f"{name:42s} {tp:10.4f}")
            continue
        assert call(ck)() == call(_pykernels)()
        tc = best_of(call(ck), args.repeat)
        print(f"{name:42s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
