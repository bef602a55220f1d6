"""Butterfly transform timings across problem sizes.

Reports best-of-three wall times for the Boolean Walsh transform up to
n = 20 and the generalized transform up to n = 16, k = 5.  Everything
stays in int64; times include the exactness checks run on construction.
"""

import argparse
import time

import numpy as np

from gbent.boolfn import BooleanFunction, wht
from gbent.gbf import GeneralizedBooleanFunction, gwht


def best_of(fn, repeats=3) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    rng = np.random.default_rng(0)

    print(f"{'transform':>10} {'n':>3} {'k':>3} {'best':>10}")
    for n in (12, 16, 20):
        f = BooleanFunction(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))
        dt = best_of(lambda: wht(f), args.repeats)
        print(f"{'wht':>10} {n:>3} {'-':>3} {1e3 * dt:>8.1f}ms")
    for n, k in ((12, 3), (16, 4), (16, 5)):
        g = GeneralizedBooleanFunction(n, k, rng.integers(0, 1 << k, size=1 << n))
        dt = best_of(lambda: gwht(g), args.repeats)
        print(f"{'gwht':>10} {n:>3} {k:>3} {1e3 * dt:>8.1f}ms")


if __name__ == "__main__":
    main()
