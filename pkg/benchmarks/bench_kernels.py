"""Compare the compiled and pure-Python term kernels.

    python3 benchmarks/bench_kernels.py [--n 4] [--degree 12] [--repeat 3]
"""

import argparse
import random
import time

from nhv import _pykernels
from nhv import derivations as dv
from nhv.extpoly import monomial_keys

try:
    from nhv import _ckernels
except ImportError:
    _ckernels = None


def random_terms(n, D, count, seed):
    rng = random.Random(seed)
    keys = monomial_keys(n, D)
    return {k: rng.randint(-9, 9) or 1 for k in rng.sample(keys, min(count, len(keys)))}


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    n, D = a.n, a.degree
    t = random_terms(n, D, 3000, 1)
    small = random_terms(n, D // 2, 150, 2)
    xs, ws = dv.dn_spec(n)._table(n)
    cases = {
        "mul_terms": lambda k: k.mul_terms(t, small, 0),
        "transpose_terms": lambda k: k.transpose_terms(t, 0, 0),
        "demazure_terms": lambda k: k.demazure_terms(t, 0, 0),
        "derive_terms": lambda k: k.derive_terms(t, xs, ws, 0),
        "derive_terms mod 7": lambda k: k.derive_terms(t, xs, ws, 7),
    }
    print(f"n={n} D={D}, {len(t)} terms")
    print(f"{'kernel':<20}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases.items():
        tp, rp = timed(lambda: fn(_pykernels), a.repeat)
        if _ckernels is None:
            print(f"{name:<20}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc, rc = timed(lambda: fn(_ckernels), a.repeat)
        assert rp == rc, f"{name}: backends disagree"
        print(f"{name:<20}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
