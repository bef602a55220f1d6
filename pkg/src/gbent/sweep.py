"""Vectorized gbent testing over whole families of functions.

The scalar routes in the analysis module decide one function at a time;
here the same three routes run over a values matrix V of shape (F, 2^n)
holding F functions at once, entirely in integer numpy:

  direct     one index-and-sign tensor per function, FWHT along the point
             axis, exact negacyclic norms: flat iff |H(u)|^2 = 2^n
  spectral   component sign tensors, FWHT, vectorized Hadamard row match
  quadruple  component magnitudes plus the product relations

All routes use int64 throughout (coefficients are bounded by 2^n and norms
by 2^{2n}).  A sweep asserts pointwise equality of the direct and spectral
per-u pass masks and verdict equality of all routes; any discrepancy is
collected rather than raised, so callers can report it.

Enumeration helpers provide exhaustive (lexicographic truth-table order)
and random function families in chunks, and search_gbent drives them for
the command-line search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .analysis import gbent_reports
from .boolfn import fwht_
from .cyclotomic import norm_squared_coeffs
from .errors import SpaceTooLarge
from .gbf import GeneralizedBooleanFunction
from .hadamard import row, zero_sum_quadruples

SEARCH_BITS_CAP = 24


def batch_direct_flat(n: int, k: int, V: np.ndarray) -> np.ndarray:
    """(F, 2^n) mask: |H_f(u)|^2 = 2^n exactly, for each function and u."""
    F, N = V.shape
    m = 1 << (k - 1)
    low = (V & (m - 1)).astype(np.int64)
    sign = (1 - 2 * (V >> (k - 1))).astype(np.int64)
    Z = np.zeros((F, N, m), dtype=np.int64)
    np.put_along_axis(Z, low[:, :, None], sign[:, :, None], axis=2)
    fwht_(Z, axis=1)
    norms = norm_squared_coeffs(Z)
    return (norms[..., 0] == 1 << n) & (norms[..., 1:] == 0).all(axis=-1)


def batch_component_walsh(n: int, k: int, V: np.ndarray) -> np.ndarray:
    """(F, 2^n, 2^{k-1}) tensor of component Walsh values W_{g_i}(u)."""
    m = 1 << (k - 1)
    low = V & (m - 1)
    top = (V >> (k - 1)).astype(np.int64)
    par = (np.bitwise_count((low[:, :, None] & np.arange(m)).astype(np.uint64))
           & 1).astype(np.int64)
    S = (1 - 2 * par) * (1 - 2 * top)[:, :, None]
    fwht_(S, axis=1)
    return S


def _match_rows_even(W: np.ndarray, c: int, bits: int) -> np.ndarray:
    """Vectorized signed-Hadamard-row match on the last axis."""
    m = W.shape[-1]
    H = np.stack([row(bits, r) for r in range(m)])
    sign = np.where(W[..., 0] > 0, 1, -1).astype(np.int64)
    r = np.zeros(W.shape[:-1], dtype=np.int64)
    for s in range(bits):
        r |= ((sign * W[..., 1 << s]) < 0).astype(np.int64) << s
    pred = sign[..., None] * c * H[r]
    return (W == pred).all(axis=-1)


def batch_spectral_pass(n: int, k: int, W: np.ndarray) -> np.ndarray:
    """(F, 2^n) mask: the component vector W(u) has the gbent shape."""
    if k == 1:
        if n % 2:
            return np.zeros(W.shape[:2], dtype=bool)
        return np.abs(W[..., 0]) == 1 << (n // 2)
    if n % 2 == 0:
        return _match_rows_even(W, 1 << (n // 2), k - 1)
    half = 1 << (k - 2)
    c = 1 << ((n + 1) // 2)
    low, high = W[..., :half], W[..., half:]
    low_zero = (low == 0).all(axis=-1)
    high_zero = (high == 0).all(axis=-1)
    active = np.where(low_zero[..., None], high, low)
    return (low_zero ^ high_zero) & _match_rows_even(active, c, k - 2)


def _products_hold(W: np.ndarray, quads) -> np.ndarray:
    out = np.ones(W.shape[:-1], dtype=bool)
    for j, cc, l, v in quads:
        out &= W[..., j] * W[..., cc] == W[..., l] * W[..., v]
    return out


def batch_quadruple_verdict(n: int, k: int, W: np.ndarray) -> np.ndarray:
    """(F,) verdicts of the product-relation route, k >= 2."""
    m = 1 << (k - 1)
    if n % 2 == 0:
        c = 1 << (n // 2)
        mag = (np.abs(W) == c).all(axis=(1, 2))
        prods = _products_hold(W, zero_sum_quadruples(m)).all(axis=1)
        return mag & prods
    c = 1 << ((n + 1) // 2)
    semi = ((W == 0) | (np.abs(W) == c)).all(axis=(1, 2))
    half = 1 << (k - 2)
    low, high = W[..., :half], W[..., half:]
    low_zero = (low == 0).all(axis=-1)
    high_zero = (high == 0).all(axis=-1)
    active = np.where(low_zero[..., None], high, low)
    per_u = ((low_zero ^ high_zero)
             & (active != 0).all(axis=-1)
             & _products_hold(active, zero_sum_quadruples(half)))
    return semi & per_u.all(axis=1)


@dataclass(frozen=True)
class SweepResult:
    """Outcome of one batched three-route sweep."""

    n: int
    k: int
    total: int
    gbent_count: int
    verdicts: np.ndarray
    mismatches: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return not self.mismatches


def sweep_three_routes(n: int, k: int, V: np.ndarray) -> SweepResult:
    """Run all routes over a values matrix and collect disagreements.

    A function index lands in mismatches if the direct and spectral per-u
    masks differ anywhere, or if any route verdict differs (the quadruple
    route participates for k >= 2).
    """
    V = np.ascontiguousarray(V, dtype=np.int64)
    direct = batch_direct_flat(n, k, V)
    W = batch_component_walsh(n, k, V)
    spectral = batch_spectral_pass(n, k, W)
    bad = (direct != spectral).any(axis=1)
    verdicts = direct.all(axis=1)
    if k >= 2:
        bad |= verdicts != batch_quadruple_verdict(n, k, W)
    bad |= verdicts != spectral.all(axis=1)
    return SweepResult(n, k, len(V), int(verdicts.sum()), verdicts,
                       tuple(np.flatnonzero(bad).tolist()))


def exhaustive_values(n: int, k: int, chunk: int = 1 << 12) -> Iterator[np.ndarray]:
    """All of GB_n^{2^k} as value matrices, lexicographic truth-table order.

    The value at point 0 is the most significant digit, so functions are
    ordered as tuples (f(0), f(1), ...).
    """
    N = 1 << n
    bits = k * N
    if bits > SEARCH_BITS_CAP:
        raise SpaceTooLarge(
            f"|GB_{n}^{1 << k}| = 2^{bits} exceeds the enumeration cap 2^{SEARCH_BITS_CAP}")
    total = 1 << bits
    mask = (1 << k) - 1
    shifts = np.array([k * (N - 1 - x) for x in range(N)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] >> shifts) & mask


def random_values(rng: np.random.Generator, n: int, k: int,
                  count: int) -> np.ndarray:
    return rng.integers(0, 1 << k, size=(count, 1 << n), dtype=np.int64)


def sweep_exhaustive(n: int, k: int) -> SweepResult:
    """Three-route sweep over all of GB_n^{2^k}, accumulated chunkwise."""
    total = gbent = 0
    verdicts = []
    mismatches: list[int] = []
    for V in exhaustive_values(n, k):
        res = sweep_three_routes(n, k, V)
        mismatches.extend(i + total for i in res.mismatches)
        total += res.total
        gbent += res.gbent_count
        verdicts.append(res.verdicts)
    return SweepResult(n, k, total, gbent, np.concatenate(verdicts),
                       tuple(mismatches))


def search_gbent(n: int, k: int, count: int | None = None,
                 rng: np.random.Generator | None = None,
                 ) -> tuple[list[GeneralizedBooleanFunction], int]:
    """Gbent functions from exhaustive (count=None) or random enumeration.

    Every batch hit is re-verified by the scalar routes before being
    returned; a route disagreement would surface here as an exception.
    Returns (found functions, total functions examined).
    """
    found: list[GeneralizedBooleanFunction] = []
    total = 0
    if count is None:
        chunks = exhaustive_values(n, k)
    else:
        if rng is None:
            rng = np.random.default_rng()
        chunks = iter([random_values(rng, n, k, count)])
    for V in chunks:
        mask = batch_direct_flat(n, k, V).all(axis=1)
        total += len(V)
        for i in np.flatnonzero(mask):
            f = GeneralizedBooleanFunction(n, k, V[i])
            reports = gbent_reports(f)
            assert all(r.verdict for r in reports)
            found.append(f)
    return found, total
