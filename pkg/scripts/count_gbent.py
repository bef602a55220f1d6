"""Census of gbent functions over every exhaustively tractable space.

For each (n, k) with k * 2^n <= 24 the whole of GB_n^{2^k} is swept with
all three decision routes; any route disagreement would be reported.
"""

import argparse
import time

from gbent.sweep import SEARCH_BITS_CAP, sweep_exhaustive


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-k", type=int, default=4)
    args = parser.parse_args()

    print(f"{'n':>3} {'k':>3} {'space':>12} {'gbent':>8} {'agree':>6} {'time':>9}")
    for n in range(1, args.max_n + 1):
        for k in range(1, args.max_k + 1):
            if k * (1 << n) > SEARCH_BITS_CAP:
                continue
            t0 = time.perf_counter()
            res = sweep_exhaustive(n, k)
            dt = time.perf_counter() - t0
            print(f"{n:>3} {k:>3} {res.total:>12} {res.gbent_count:>8} "
                  f"{'yes' if res.agree else 'NO':>6} {dt:>8.2f}s")
            if not res.agree:
                print(f"    route disagreements at indices {res.mismatches[:10]}")


if __name__ == "__main__":
    main()
