"""Walk through the two Z_8-bent constructions and their invariants.

Builds the field-power function on V_8 and the spread function on V_6,
then prints for each: the Z_q-bent verdict by multiples and truncations,
the relative-difference-set confirmation, the plateau order of the Gray
image, and (even n) the dual round trip.
"""

import numpy as np

from gbent.analysis import coordinates_span_bent, is_zq_bent, verify_rds
from gbent.constructions import example1, regular_spread, spread_zqbent
from gbent.duality import dual_gbent, gray_map, verify_gray_plateaued
from gbent.boolfn import wht


def showcase(name, f) -> None:
    print(f"== {name}: n={f.n} k={f.k} ==")
    rep = is_zq_bent(f)
    print(f"Z_{1 << f.k}-bent: {rep.verdict}")
    print(f"  multiples a=1..{(1 << f.k) - 1} gbent: {all(rep.per_a)}")
    for t, ok in enumerate(rep.per_t):
        print(f"  truncation t={t} -> GB_{f.n}^{1 << (f.k - t)} gbent: {ok}")
    print(f"relative difference set: {verify_rds(f)}")
    print(f"all coordinate combinations bent: {coordinates_span_bent(f)}")
    cls = verify_gray_plateaued(f)
    image = gray_map(f)
    amp = int(np.abs(wht(image.function).values).max())
    print(f"Gray image on {f.n + f.k - 1} variables: {cls} (peak |W| = {amp})")
    fd = dual_gbent(f)
    back = dual_gbent(fd)
    print(f"dual gbent with double dual == f: {bool((back.values == f.values).all())}")
    print()


def main() -> None:
    showcase("field power construction, m=4", example1(4))
    phi = [s & 7 for s in range(8)]
    showcase("regular spread construction, m=3", spread_zqbent(regular_spread(3), 3, phi))


if __name__ == "__main__":
    main()
