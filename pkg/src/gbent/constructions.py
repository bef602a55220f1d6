"""Generators for concrete gbent, Z_q-bent, and bent functions.

Families covered: Maiorana-McFarland bent functions Tr(x pi(y)); a trace
function on GF(2^m) x GF(2^m) that is Z_8-bent whenever 4 | m and 5 does
not divide m; spread-based Z_{2^k}-bent functions from a balanced map on
the lines of a spread; the bent majority g_0 g_1 + g_0 g_2 + g_1 g_2 of a
dual-sum-zero quadruple; and the equivalence and lifting transforms that
preserve gbentness.

Every generator verifies its own postcondition before returning (bentness,
gbentness, or Z_q-bentness as appropriate) on the sizes where this is
feasible; a failed postcondition is an internal error, never a silent
return.  Transforms additionally enforce the odd-n representation
constraint: the matrix B acting on the low coordinates must fix the
designated splitting subspace when its mask is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import is_gbent_direct, is_zq_bent
from .boolfn import BooleanFunction, classify, dual, wht
from .errors import (
    BadM,
    DualSumNonzero,
    InternalInconsistency,
    KTooLarge,
    L1NotInvariant,
    NotBalanced,
    NotBent,
    NotGbent,
    NotPermutation,
    RLessThanK,
    ShapeMismatch,
    SingularMatrix,
)
from .gbf import GeneralizedBooleanFunction, coordinates
from .gf2m import Field, inverse_exponent


def _field_ops(m: int):
    """(mul, trace) callables; GF(2) handled without a Field object."""
    if m == 1:
        return (lambda a, b: a & b), (lambda a: a)
    fld = Field(m)
    return fld.mul, fld.trace


# -- spreads ------------------------------------------------------------------


def _f2_basis(points) -> list[int]:
    basis: list[int] = []
    for p in points:
        for b in basis:
            p = min(p, p ^ b)
        if p:
            basis.append(p)
            basis.sort(reverse=True)
    return basis


def _span(basis) -> set[int]:
    out = {0}
    for b in basis:
        out |= {s ^ b for s in out}
    return out


@dataclass(frozen=True)
class Spread:
    """2^m + 1 subspaces of V_{2m} of dimension m meeting pairwise in 0.

    subspaces[0] is the distinguished line assigned value 0 by the spread
    construction; the remaining lines are indexed 1..2^m.
    """

    n: int
    subspaces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("a spread needs n = 2m")
        m = self.n // 2
        if len(self.subspaces) != (1 << m) + 1:
            raise ValueError(
                f"expected {(1 << m) + 1} subspaces, got {len(self.subspaces)}")
        seen_nonzero: set[int] = set()
        for pts in self.subspaces:
            s = set(pts)
            if len(s) != 1 << m or 0 not in s:
                raise ValueError("each subspace must have 2^m points including 0")
            if _span(_f2_basis(s)) != s:
                raise ValueError("subspace set is not F_2-linear")
            nz = s - {0}
            if seen_nonzero & nz:
                raise ValueError("subspaces overlap outside 0")
            seen_nonzero |= nz
        if len(seen_nonzero) != (1 << self.n) - 1:
            raise ValueError("subspaces do not cover V_n")

    @property
    def m(self) -> int:
        return self.n // 2


def regular_spread(m: int) -> Spread:
    """The spread {(0, y)} union {(x, sx) : s in GF(2^m)} of V_{2m}."""
    if not 1 <= m <= 8:
        raise ValueError(f"regular spread supported for 1 <= m <= 8, got {m}")
    mul, _ = _field_ops(m)
    size = 1 << m
    lines = [tuple(y << m for y in range(size))]
    for s in range(size):
        lines.append(tuple(x + (mul(s, x) << m) for x in range(size)))
    return Spread(2 * m, tuple(lines))


def spread_zqbent(spread: Spread, k: int,
                  phi) -> GeneralizedBooleanFunction:
    """Z_{2^k}-bent function from a balanced map on the lines of a spread.

    f vanishes on subspaces[0] and at 0, and takes the constant value
    phi[s-1] on the rest of line s.  phi must hit every value of Z_{2^k}
    exactly 2^{m-k} times.
    """
    m = spread.m
    if k > m:
        raise KTooLarge(f"k = {k} exceeds the spread parameter m = {m}")
    phi = list(phi)
    if len(phi) != 1 << m:
        raise NotBalanced(f"phi must have 2^m = {1 << m} entries")
    counts = np.bincount(np.asarray(phi), minlength=1 << k)
    if len(counts) != 1 << k or not (counts == 1 << (m - k)).all():
        raise NotBalanced("phi must take each value exactly 2^{m-k} times")
    values = np.zeros(1 << spread.n, dtype=np.int64)
    for s, pts in enumerate(spread.subspaces[1:], start=1):
        for x in pts:
            if x:
                values[x] = phi[s - 1]
    f = GeneralizedBooleanFunction(spread.n, k, values)
    if m <= 4 and not is_zq_bent(f).verdict:
        raise InternalInconsistency("spread construction is not Z_q-bent")
    return f


# -- trace constructions ------------------------------------------------------


def mm_bent(m: int, pi) -> BooleanFunction:
    """Maiorana-McFarland bent function Tr(x pi(y)) on 2m variables.

    pi is a permutation of GF(2^m) given as a table of field elements;
    the point (x, y) is packed as index x + 2^m y.
    """
    if not 1 <= m <= 8:
        raise ValueError(f"supported for 1 <= m <= 8, got {m}")
    pi = list(pi)
    if sorted(pi) != list(range(1 << m)):
        raise NotPermutation("pi must be a permutation of GF(2^m)")
    mul, tr = _field_ops(m)
    size = 1 << m
    table = np.zeros(size * size, dtype=np.uint8)
    for y in range(size):
        py = pi[y]
        base = y << m
        for x in range(size):
            table[base + x] = tr(mul(x, py))
    f = BooleanFunction(2 * m, table)
    if classify(wht(f)).kind != "Bent":
        raise InternalInconsistency("Tr(x pi(y)) failed the bentness check")
    return f


def example1(m: int, c: int = 1) -> GeneralizedBooleanFunction:
    """Z_8-bent trace function on GF(2^m) x GF(2^m), for 4 | m, 5 not | m.

    f(x, y) = Tr(c(1+b) y^d x) + 2 Tr(c(1+b^{-1}) y^d x) + 4 Tr(c y^d x)
    with b a root of z^4 + z + 1, d the inverse of 11 mod 2^m - 1, and
    0^d = 0.  The exponent condition gcd(11, 2^m - 1) = 1 is checked
    independently of the divisibility conditions on m.
    """
    if m % 4 != 0 or m % 5 == 0:
        raise BadM(f"need 4 | m and 5 not | m, got m = {m}")
    if c == 0:
        raise ValueError("c must be a nonzero field element")
    d = inverse_exponent(11, m)
    fld = Field(m)
    b = fld.find_root(0b10011)
    mults = (fld.mul(c, 1 ^ b), fld.mul(c, 1 ^ fld.inv(b)), c)
    size = 1 << m
    yd = [fld.pow(y, d) for y in range(size)]
    values = np.zeros(size * size, dtype=np.int64)
    for y in range(size):
        base = y << m
        for x in range(size):
            t = fld.mul(yd[y], x)
            values[base + x] = (fld.trace(fld.mul(mults[0], t))
                                + 2 * fld.trace(fld.mul(mults[1], t))
                                + 4 * fld.trace(fld.mul(mults[2], t)))
    f = GeneralizedBooleanFunction(2 * m, 3, values)
    if m == 4 and not is_zq_bent(f).verdict:
        raise InternalInconsistency("trace construction is not Z_8-bent")
    return f


# -- secondary construction ---------------------------------------------------


def mesnager_secondary(g0: BooleanFunction, g1: BooleanFunction,
                       g2: BooleanFunction) -> BooleanFunction:
    """Bent majority g0 g1 + g0 g2 + g1 g2 of a dual-sum-zero quadruple.

    Requires g0, g1, g2 and g3 = g0 + g1 + g2 all bent with
    g0* + g1* + g2* + g3* = 0; this is exactly the condition under which
    the majority is bent, and then its dual is the majority of the duals
    (verified before returning).
    """
    g3 = g0 ^ g1 ^ g2
    quad = (g0, g1, g2, g3)
    duals = []
    for g in quad:
        try:
            duals.append(dual(g))
        except NotBent as exc:
            raise NotBent(f"all four functions must be bent: {exc}") from exc
    if (duals[0] ^ duals[1] ^ duals[2] ^ duals[3]).weight() != 0:
        raise DualSumNonzero(
            "g0* + g1* + g2* + g3* != 0; the majority would not be bent")
    maj = BooleanFunction(g0.n, (g0.table & g1.table) ^ (g0.table & g2.table)
                          ^ (g1.table & g2.table))
    dmaj = BooleanFunction(g0.n,
                           (duals[0].table & duals[1].table)
                           ^ (duals[0].table & duals[2].table)
                           ^ (duals[1].table & duals[2].table))
    if classify(wht(maj)).kind != "Bent" or dual(maj) != dmaj:
        raise InternalInconsistency("majority failed its bent/dual check")
    return maj


# -- equivalence and lifting --------------------------------------------------


def _f2_rank(mat: np.ndarray) -> int:
    rows = [sum(int(b) << j for j, b in enumerate(row)) for row in mat]
    rank = 0
    for col in range(mat.shape[1]):
        pivot = next((i for i, r in enumerate(rows) if (r >> col) & 1), None)
        if pivot is None:
            continue
        piv = rows.pop(pivot)
        rows = [r ^ piv if (r >> col) & 1 else r for r in rows]
        rank += 1
    return rank


def _validate_bit_matrix(mat: np.ndarray, size: int, name: str) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.uint8)
    if mat.shape != (size, size):
        raise ShapeMismatch(f"{name} must be {size}x{size}, got {mat.shape}")
    if not np.isin(mat, (0, 1)).all():
        raise ValueError(f"{name} entries must be bits")
    if size and _f2_rank(mat) != size:
        raise SingularMatrix(f"{name} is singular over F_2")
    return mat


@dataclass(frozen=True, eq=False)
class LinearTransform:
    """Equivalence data (A, B, b_mask) for functions in GB_n^{2^k}.

    A is an invertible n x n bit matrix precomposed as x -> Ax; B is an
    invertible (k-1) x (k-1) bit matrix mixing the low coordinates; b_mask
    selects the combination of low coordinates added to the top one.
    """

    A: np.ndarray
    B: np.ndarray
    b_mask: int = 0

    def __post_init__(self):
        object.__setattr__(self, "A",
                           _validate_bit_matrix(self.A, len(self.A), "A"))
        object.__setattr__(self, "B",
                           _validate_bit_matrix(self.B, len(self.B), "B"))
        if not 0 <= self.b_mask < 1 << len(self.B):
            raise ValueError(f"b_mask {self.b_mask} out of range")


def identity_transform(n: int, k: int) -> LinearTransform:
    return LinearTransform(np.eye(n, dtype=np.uint8),
                           np.eye(k - 1, dtype=np.uint8))


def random_invertible(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform invertible bit matrix by rejection sampling."""
    if size == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    while True:
        mat = rng.integers(0, 2, size=(size, size), dtype=np.uint8)
        if _f2_rank(mat) == size:
            return mat


def random_transform(rng: np.random.Generator, n: int, k: int,
                     l1_mask: int | None = None) -> LinearTransform:
    """Random equivalence transform; B fixes the split mask when given."""
    B = random_invertible(rng, k - 1)
    if l1_mask is not None:
        while not _fixes_mask(B, l1_mask):
            B = random_invertible(rng, k - 1)
    return LinearTransform(random_invertible(rng, n), B,
                           int(rng.integers(0, 1 << (k - 1))))


def _mask_bits(mask: int, size: int) -> np.ndarray:
    return np.array([(mask >> j) & 1 for j in range(size)], dtype=np.uint8)


def _fixes_mask(B: np.ndarray, mask: int) -> bool:
    bits = _mask_bits(mask, len(B))
    return bool((((B @ bits) & 1) == bits).all())


def _index_map(A: np.ndarray) -> np.ndarray:
    """idx[x] = index of A x, computed from the images of the basis."""
    n = len(A)
    img = [int(((A[:, j] & 1) << np.arange(n)).sum()) for j in range(n)]
    x = np.arange(1 << n)
    out = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        out[((x >> j) & 1) == 1] ^= img[j]
    return out


def apply_equivalence(f: GeneralizedBooleanFunction, t: LinearTransform,
                      l1_mask: int | None = None) -> GeneralizedBooleanFunction:
    """Equivalent function with coordinates B a^T, top a_{k-1} + b, at Ax.

    For odd n the designated splitting subspace must survive in the new
    representation: when its mask is supplied, B c = c is required.
    """
    if len(t.A) != f.n:
        raise ShapeMismatch(f"A is {len(t.A)}x{len(t.A)}, function has n={f.n}")
    if len(t.B) != f.k - 1:
        raise ShapeMismatch(f"B is {len(t.B)}x{len(t.B)}, function has k={f.k}")
    if f.n % 2 and l1_mask is not None and not _fixes_mask(t.B, l1_mask):
        raise L1NotInvariant(
            f"B does not fix the splitting subspace mask {l1_mask}")
    coords = coordinates(f)
    tables = np.stack([g.table for g in coords])
    low = (t.B @ tables[:-1]) & 1 if f.k > 1 else tables[:0]
    shift = tables[-1].copy()
    for j in range(f.k - 1):
        if (t.b_mask >> j) & 1:
            shift ^= tables[j]
    new_tables = np.vstack([low, shift[None, :]]).astype(np.int64)
    weights = (1 << np.arange(f.k, dtype=np.int64))[:, None]
    values = (new_tables * weights).sum(axis=0)[_index_map(t.A)]
    return GeneralizedBooleanFunction(f.n, f.k, values)


def lift(f: GeneralizedBooleanFunction, r: int) -> GeneralizedBooleanFunction:
    """Embed a gbent function of GB_n^{2^k} as a gbent function of GB_n^{2^r}.

    Even n: the top coordinate moves to position r-1, the rest stay.  Odd
    n: a_{k-2} moves to r-2 and a_{k-1} to r-1.  The result is verified
    gbent before returning.
    """
    if r < f.k:
        raise RLessThanK(f"need r >= k, got r = {r} < k = {f.k}")
    if not is_gbent_direct(f).verdict:
        raise NotGbent("only gbent functions are lifted")
    if r == f.k:
        return f
    values = np.zeros(1 << f.n, dtype=np.int64)
    coords = coordinates(f)
    if f.n % 2 == 0:
        for j in range(f.k - 1):
            values += coords[j].table.astype(np.int64) << j
        values += coords[f.k - 1].table.astype(np.int64) << (r - 1)
    else:
        for j in range(f.k - 2):
            values += coords[j].table.astype(np.int64) << j
        values += coords[f.k - 2].table.astype(np.int64) << (r - 2)
        values += coords[f.k - 1].table.astype(np.int64) << (r - 1)
    out = GeneralizedBooleanFunction(f.n, r, values)
    if not is_gbent_direct(out).verdict:
        raise InternalInconsistency("lifted function is not gbent")
    return out
