"""Generalized Boolean functions f: V_n -> Z_{2^k} and their exact
generalized Walsh-Hadamard transform.

A function is stored as its value table and decomposes uniquely as

    f(x) = a_0(x) + 2 a_1(x) + ... + 2^{k-1} a_{k-1}(x)

with Boolean coordinate functions a_i (bit i of the value).  For k >= 2 the
2^{k-1} component functions

    g_i = a_{k-1} xor i_0 a_0 xor ... xor i_{k-2} a_{k-2},

indexed by the little-endian bits of i, tie the Z_{2^k}-valued spectrum to
ordinary Walsh spectra: with S(u) = H_{2^{k-1}} (W_{g_0}(u), ..., W_{g_{2^{k-1}-1}}(u))^T
one has 2^{k-1} H_f(u) = sum_t S_t(u) zeta^t, which this module implements
as an independent second route to the GWHT.

The GWHT itself is computed exactly: each value zeta^{f(x)} is a signed
basis vector of Z[zeta_{2^k}], the whole spectrum is one integer coefficient
matrix of shape (2^n, 2^{k-1}), and the transform is a butterfly down the
position axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .boolfn import MAX_N, BooleanFunction, fwht_, wht
from .cyclotomic import CyclotomicInt, norm_squared_coeffs
from .errors import FormatError, InternalInconsistency, InvalidK, ShapeMismatch

MAX_K = 12


@dataclass(frozen=True, eq=False)
class GeneralizedBooleanFunction:
    """Value table of a map V_n -> Z_{2^k}."""

    n: int
    k: int
    values: np.ndarray

    def __post_init__(self):
        if not isinstance(self.k, int) or not 1 <= self.k <= MAX_K:
            raise InvalidK(f"k must be an integer in [1, {MAX_K}], got {self.k!r}")
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be an integer in [1, {MAX_N}], got {self.n!r}")
        vals = np.ascontiguousarray(self.values, dtype=np.int64)
        if vals.shape != (1 << self.n,):
            raise ValueError(f"values must have length 2^{self.n}")
        if vals.size and (vals.min() < 0 or vals.max() >= (1 << self.k)):
            raise ValueError(f"values must lie in [0, 2^{self.k})")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __call__(self, x: int) -> int:
        return int(self.values[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralizedBooleanFunction):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and bool(
            np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.values.tobytes()))

    # -- coordinate access ---------------------------------------------------

    def coordinate(self, j: int) -> BooleanFunction:
        """a_j, bit j of the value table."""
        if not 0 <= j < self.k:
            raise IndexError(f"coordinate index {j} outside [0, {self.k})")
        return BooleanFunction(self.n, ((self.values >> j) & 1).astype(np.uint8))

    def scale(self, a: int) -> "GeneralizedBooleanFunction":
        """The multiple (a f) mod 2^k, same modulus."""
        return GeneralizedBooleanFunction(self.n, self.k, (self.values * a) % (1 << self.k))

    def truncate(self, t: int) -> "GeneralizedBooleanFunction":
        """Drop the top t coordinates: f mod 2^{k-t} in GB_n^{2^{k-t}}."""
        if not 0 <= t <= self.k - 1:
            raise ValueError(f"t must be in [0, {self.k - 1}], got {t}")
        return GeneralizedBooleanFunction(self.n, self.k - t, self.values % (1 << (self.k - t)))

    # -- text form -----------------------------------------------------------

    def to_text(self) -> str:
        return f"{self.n} {self.k}\n{' '.join(str(v) for v in self.values)}\n"

    @classmethod
    def from_text(cls, text: str) -> "GeneralizedBooleanFunction":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise FormatError("empty input")
        header = lines[0].split()
        if len(header) != 2:
            raise FormatError(f"header must be 'n k', got {lines[0]!r}")
        try:
            n, k = int(header[0]), int(header[1])
        except ValueError as e:
            raise FormatError(f"bad header {lines[0]!r}") from e
        if not 1 <= n <= MAX_N:
            raise FormatError(f"n out of range: {n}")
        if not 1 <= k <= MAX_K:
            raise FormatError(f"k out of range: {k}")
        tokens = " ".join(lines[1:]).split()
        if len(tokens) != 1 << n:
            raise FormatError(f"expected {1 << n} values, got {len(tokens)}")
        try:
            vals = np.array([int(t) for t in tokens], dtype=np.int64)
        except ValueError as e:
            raise FormatError("values must be integers") from e
        if vals.min() < 0 or vals.max() >= (1 << k):
            raise FormatError(f"values must lie in [0, {1 << k})")
        return cls(n, k, vals)


def coordinates(f: GeneralizedBooleanFunction) -> list[BooleanFunction]:
    """The k coordinate functions a_0, ..., a_{k-1}."""
    return [f.coordinate(j) for j in range(f.k)]


def assemble(coords) -> GeneralizedBooleanFunction:
    """Inverse of coordinates: f = sum_j 2^j a_j."""
    coords = list(coords)
    if not coords:
        raise ShapeMismatch("need at least one coordinate function")
    n = coords[0].n
    if any(not isinstance(a, BooleanFunction) or a.n != n for a in coords):
        raise ShapeMismatch("coordinates must be BooleanFunctions on a common n")
    vals = np.zeros(1 << n, dtype=np.int64)
    for j, a in enumerate(coords):
        vals |= a.table.astype(np.int64) << j
    return GeneralizedBooleanFunction(n, len(coords), vals)


def component_sign_matrix(f: GeneralizedBooleanFunction) -> np.ndarray:
    """(-1)^{g_i(x)} as an int64 array of shape (2^n, 2^{k-1}), k >= 2.

    Row x is (-1)^{a_{k-1}(x)} times the Hadamard row indexed by the low
    k-1 bits of f(x), since g_i(x) = a_{k-1}(x) xor (bits of i).(low bits of f(x)).
    """
    if f.k < 2:
        raise InvalidK(f"component functions need k >= 2, got k={f.k}")
    m = 1 << (f.k - 1)
    low = (f.values & (m - 1)).astype(np.uint32)
    top = (f.values >> (f.k - 1)).astype(np.int64)
    i = np.arange(m, dtype=np.uint32)
    rows = 1 - 2 * (np.bitwise_count(low[:, None] & i[None, :]) & 1).astype(np.int64)
    return (1 - 2 * top)[:, None] * rows


def component_walsh_matrix(f: GeneralizedBooleanFunction) -> np.ndarray:
    """W_{g_i}(u) for all components at once: shape (2^n, 2^{k-1}), row u."""
    signs = component_sign_matrix(f)
    fwht_(signs, axis=0)
    return signs


@dataclass(frozen=True)
class ComponentFamily:
    """The 2^{k-1} component functions g_i in index order."""

    components: tuple[BooleanFunction, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> BooleanFunction:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)


def components(f: GeneralizedBooleanFunction) -> ComponentFamily:
    """All component functions g_i = a_{k-1} xor i_0 a_0 xor ... xor i_{k-2} a_{k-2}."""
    signs = component_sign_matrix(f)
    tables = ((1 - signs) // 2).astype(np.uint8)
    return ComponentFamily(tuple(
        BooleanFunction(f.n, tables[:, i]) for i in range(signs.shape[1])))


@dataclass(frozen=True, eq=False)
class GwhtSpectrum:
    """Exact GWHT values H_f(u) for all u, held as one coefficient matrix.

    coeffs has shape (2^n, 2^{k-1}); row u lists the power-basis coefficients
    of H_f(u) in Z[zeta_{2^k}].  Construction checks the generalized Parseval
    identity sum_u |H(u)|^2 = 2^{2n} exactly.
    """

    n: int
    k: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.coeffs, dtype=np.int64)
        if arr.shape != (1 << self.n, 1 << (self.k - 1)):
            raise ValueError(f"coefficient matrix must be 2^{self.n} x 2^{self.k - 1}")
        # safe in int64: per row |coefficient t of |H(u)|^2| <= coefficient 0,
        # and the coefficient-0 column sums to 2^{2n} <= 2^48
        total = norm_squared_coeffs(arr).sum(axis=0)
        if int(total[0]) != 1 << (2 * self.n) or total[1:].any():
            raise ValueError("generalized Parseval check failed")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def __getitem__(self, u: int) -> CyclotomicInt:
        return CyclotomicInt(self.k, tuple(int(c) for c in self.coeffs[u]))

    @cached_property
    def values(self) -> tuple[CyclotomicInt, ...]:
        return tuple(self[u] for u in range(1 << self.n))

    def norm_squared_all(self) -> np.ndarray:
        """|H(u)|^2 coefficient matrix, shape (2^n, 2^{k-1})."""
        return norm_squared_coeffs(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GwhtSpectrum):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and bool(
            np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.coeffs.tobytes()))


def gwht(f: GeneralizedBooleanFunction) -> GwhtSpectrum:
    """H_f(u) = sum_x zeta^{f(x)} (-1)^{u.x}, exactly, for all u at once.

    zeta^{f(x)} is +-1 times a basis power (sign from the top bit of f(x)),
    so the initial matrix has one +-1 entry per row; the butterfly down the
    position axis then sums the character terms coefficientwise.
    """
    m = 1 << (f.k - 1)
    Z = np.zeros((1 << f.n, m), dtype=np.int64)
    lo = (f.values % m).astype(np.int64)
    sign = np.where(f.values >= m, -1, 1).astype(np.int64)
    Z[np.arange(1 << f.n), lo] = sign
    fwht_(Z, axis=0)
    return GwhtSpectrum(f.n, f.k, Z)


def gwht_via_components(f: GeneralizedBooleanFunction) -> GwhtSpectrum:
    """Second route to the GWHT through component Walsh spectra, k >= 2.

    Computes W_{g_i} for all i, forms S(u) = H_{2^{k-1}} W(u), and divides
    by 2^{k-1}; the division must be exact and the result must equal gwht(f).
    """
    signs = component_sign_matrix(f)
    fwht_(signs, axis=0)          # column i is now W_{g_i}
    fwht_(signs, axis=1)          # row u is now S(u)
    m = 1 << (f.k - 1)
    if (signs & (m - 1)).any():
        raise InternalInconsistency("component route: S(u) not divisible by 2^{k-1}")
    return GwhtSpectrum(f.n, f.k, signs >> (f.k - 1))


@dataclass(frozen=True)
class SVector:
    """S(u) = H_{2^{k-1}} (W_{g_0}(u), ..., W_{g_{2^{k-1}-1}}(u))^T for one u."""

    k: int
    u: int
    entries: tuple[int, ...]


def svector(f: GeneralizedBooleanFunction, u: int) -> SVector:
    """The S-vector at a single point u, computed from component spectra."""
    signs = component_sign_matrix(f)
    x = np.arange(1 << f.n, dtype=np.uint32)
    chi = 1 - 2 * (np.bitwise_count(x & np.uint32(u)) & 1).astype(np.int64)
    W = chi @ signs               # W_{g_i}(u) for all i
    fwht_(W)
    return SVector(f.k, u, tuple(int(s) for s in W))


def gwht_at(f: GeneralizedBooleanFunction, u: int) -> CyclotomicInt:
    """Single-point GWHT by direct summation (no transform)."""
    m = 1 << (f.k - 1)
    x = np.arange(1 << f.n, dtype=np.uint32)
    chi = 1 - 2 * (np.bitwise_count(x & np.uint32(u)) & 1).astype(np.int64)
    sign = np.where(f.values >= m, -chi, chi)
    coeffs = np.zeros(m, dtype=np.int64)
    np.add.at(coeffs, (f.values % m).astype(np.int64), sign)
    return CyclotomicInt(f.k, tuple(int(c) for c in coeffs))
