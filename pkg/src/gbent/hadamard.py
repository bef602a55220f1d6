"""Sylvester-Hadamard matrix rows and recognition of +-1 vectors as rows.

H_{2^k} is the k-fold Kronecker power of H_2 = [[1, 1], [1, -1]]; its row r
has entry (-1)^{popcount(j AND r)} at column j, the evaluation of a linear
form.  Rows are never materialized as full matrices: everything works from
single rows computed on demand.

The quadruple condition characterizes signed rows among all +-1 vectors:
w is +-H^{(r)} for some r exactly when w_j w_c = w_l w_v holds for every
set of four distinct indices with z_j + z_c + z_l + z_v = 0 (a 2-flat in
the index space).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import IndexOutOfRange, InvalidK


def row(k: int, r: int) -> np.ndarray:
    """Row r of H_{2^k} as a +-1 vector of length 2^k."""
    if k < 0:
        raise InvalidK(f"k must be >= 0, got {k}")
    if not 0 <= r < (1 << k):
        raise IndexOutOfRange(f"row index {r} outside [0, {1 << k})")
    j = np.arange(1 << k, dtype=np.uint32)
    parity = (np.bitwise_count(j & np.uint32(r)) & 1).astype(np.int64)
    return 1 - 2 * parity


@dataclass(frozen=True)
class RowMatch:
    """w = sign * H^{(r)} entrywise."""

    r: int
    sign: int


def _validate_pm1(w) -> np.ndarray:
    v = np.asarray(w, dtype=np.int64).reshape(-1)
    size = v.size
    if size == 0 or size & (size - 1):
        raise ValueError(f"vector length {size} is not a power of two")
    if not np.isin(v, (-1, 1)).all():
        raise ValueError("entries must be +1 or -1")
    return v


def match_row(w) -> RowMatch | None:
    """Identify w as a signed Sylvester-Hadamard row, or None.

    The sign is w[0] and bit s of r is read off w[2^s], since
    H^{(r)}[2^s] = (-1)^{r_s}; the full vector is then verified.
    """
    v = _validate_pm1(w)
    k = int(v.size).bit_length() - 1
    sign = int(v[0])
    r = 0
    for s in range(k):
        if sign * v[1 << s] == -1:
            r |= 1 << s
    if np.array_equal(v, sign * row(k, r)):
        return RowMatch(r, sign)
    return None


@lru_cache(maxsize=None)
def zero_sum_quadruples(size: int) -> tuple[tuple[int, int, int, int], ...]:
    """All index sets {j < c < l < v} in [0, size) with j^c^l^v = 0.

    Each 2-flat appears exactly once: taking (j, c, l) as the three smallest
    members forces v = j^c^l to be the largest.
    """
    if size <= 0 or size & (size - 1):
        raise ValueError(f"size {size} is not a power of two")
    quads = []
    for j in range(size):
        for c in range(j + 1, size):
            for l in range(c + 1, size):
                v = j ^ c ^ l
                if v > l:
                    quads.append((j, c, l, v))
    return tuple(quads)


def quadruple_condition(w) -> bool:
    """True iff w_j w_c = w_l w_v on every zero-sum index quadruple.

    For +-1 vectors this is equivalent to w being a signed Hadamard row;
    vectors shorter than 8 satisfy it vacuously or via the single quadruple
    (0,1,2,3).
    """
    v = _validate_pm1(w)
    for j, c, l, t in zero_sum_quadruples(int(v.size)):
        if v[j] * v[c] != v[l] * v[t]:
            return False
    return True
