"""Time the compiled and pure-Python lattice kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from compideal import kernels
from compideal.monomial import MonomialIdeal, colength, max_ideal_power, power
from compideal.newton import closure_colength, closure_power

EX71 = MonomialIdeal([(4, 0, 0), (3, 1, 0), (2, 0, 1), (2, 2, 0), (1, 2, 1), (1, 1, 2),
                      (1, 0, 3), (0, 3, 0), (0, 2, 2), (0, 1, 3), (0, 0, 5)])
SKEW = MonomialIdeal([(7, 0, 0), (0, 5, 0), (0, 0, 9), (3, 2, 1), (1, 1, 4), (2, 3, 0)])

EX71_6 = power(EX71, 6)
M4_12 = max_ideal_power(4, 12)

CASES = [
    ("staircase colength, (ex71)^6", lambda b: colength(EX71_6, backend=b)),
    ("staircase colength, M^12 in d=4", lambda b: colength(M4_12, backend=b)),
    ("closure colength, ex71 n=8", lambda b: closure_colength(EX71, 8, backend=b)),
    ("closure colength, skew n=6", lambda b: closure_colength(SKEW, 6, backend=b)),
    ("closure generators, ex71 n=5", lambda b: len(closure_power(EX71, 5, backend=b).gens)),
]


def best_of(fn, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; timing the Python backend only")
    print(f"{'case':36s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        tp, vp = best_of(lambda: fn("python"), args.repeat)
        if kernels.BACKEND == "cython":
            tc, vc = best_of(lambda: fn("cython"), args.repeat)
            assert vp == vc, f"backends disagree on {name}: {vp} != {vc}"
            print(f"{name:36s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:36s} {tp:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
