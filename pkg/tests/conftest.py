"""Shared oracles and fixtures.

The oracles here are deliberately naive (quadratic loops, definitional
sums): they are the ground truth the fast implementations are tested
against.
"""

import numpy as np
import pytest

from gbent.boolfn import BooleanFunction
from gbent.cyclotomic import CyclotomicInt


def wht_naive(f: BooleanFunction) -> np.ndarray:
    """O(4^n) Walsh-Hadamard transform by direct summation."""
    size = 1 << f.n
    x = np.arange(size)
    u = x[:, None]
    H = 1 - 2 * (np.bitwise_count(u & x) & 1).astype(np.int64)
    return H @ (1 - 2 * f.table.astype(np.int64))


def gwht_naive_at(values, n: int, k: int, u: int) -> CyclotomicInt:
    """Definitional GWHT at one point, term by term in Z[zeta_{2^k}]."""
    acc = CyclotomicInt.zero(k)
    for x in range(1 << n):
        term = CyclotomicInt.zeta_pow(k, int(values[x]))
        if bin(u & x).count("1") & 1:
            term = -term
        acc = acc + term
    return acc


def random_boolfn(rng: np.random.Generator, n: int) -> BooleanFunction:
    return BooleanFunction(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0FFEE)
