"""Compare the compiled and numpy reference kernels on random matrices.

    python benchmarks/bench_kernels.py [--sizes 16 32 64] [--repeat 5]

Both backends are imported directly, so the environment switch is not needed.
Every timed call is also checked for identical output.
"""
import argparse
import timeit

import numpy as np

from kext.exactnum import _kernels_py as pyk
from kext.exactnum.fields import named_field

try:
    from kext.exactnum import _kernels as cyk
except ImportError:  # extension not built
    cyk = None


def _cases(n, rng):
    gf16 = named_field("GF16")
    tabs = gf16.np_tables
    A16 = rng.integers(0, 16, size=(n, n)).astype(np.int64)
    B16 = rng.integers(0, 16, size=(n, n)).astype(np.int64)
    p = 65521
    Ap = rng.integers(0, p, size=(n, n)).astype(np.int64)
    Bp = rng.integers(0, p, size=(n, n)).astype(np.int64)
    return [
        ("rref GF(16)", lambda k: k.rref_tables(A16.copy(), *tabs)),
        ("matmul GF(16)", lambda k: k.matmul_tables(A16, B16, tabs[0], tabs[1])),
        ("rref GF(65521)", lambda k: k.rref_modp(Ap.copy(), p)),
        ("matmul GF(65521)", lambda k: k.matmul_modp(Ap, Bp, p)),
    ]


def _same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return list(a) == list(b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if cyk is None:
        print("compiled kernels not built; only the reference backend is available")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<18} {'n':>4} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for n in args.sizes:
        for label, call in _cases(n, rng):
            t_py = min(timeit.repeat(lambda: call(pyk), number=1, repeat=args.repeat))
            if cyk is None:
                print(f"{label:<18} {n:>4} {t_py * 1e3:>10.2f} {'-':>12} {'-':>8}")
                continue
            assert _same(call(pyk), call(cyk)), f"{label} n={n}: backends disagree"
            t_cy = min(timeit.repeat(lambda: call(cyk), number=1, repeat=args.repeat))
            print(f"{label:<18} {n:>4} {t_py * 1e3:>10.2f} {t_cy * 1e3:>12.2f} "
                  f"{t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
