"""Gbent verdicts and structural analysis.

Three independent routes decide gbentness and must always agree:

  direct     exact |H_f(u)|^2 = 2^n in Z[zeta_{2^k}] for every u
  spectral   the component-spectrum vector W(u) = (W_{g_0}(u), ...) matches
             +-2^{n/2} H^{(r)} for even n, or one of the two half-zero
             patterns (+-2^{(n+1)/2} H^{(r)}, 0) / (0, +-2^{(n+1)/2} H^{(r)})
             for odd n
  quadruple  component (semi-)bentness plus the product relations
             W_{g_j} W_{g_c} = W_{g_l} W_{g_v} on zero-sum index quadruples

Each report carries per-u witnesses: the Hadamard row index r(u), the sign,
and for odd n which half of the component spectrum vanishes.

Beyond the verdicts, this module checks the affine (semi-)bent-space
structure of the component family (dual-sum closure, majority-function
closure, and for odd n the splitting subspace L_1), decides Z_q-bentness
by two routes (all nonzero multiples gbent; all truncations gbent), and
verifies the relative-difference-set property of the graph of f by exact
pair counting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, WalshSpectrum, dual, wht
from .errors import (
    InternalInconsistency,
    InvalidK,
    NotZeroSum,
    OddN,
    TooLarge,
)
from .gbf import (
    GeneralizedBooleanFunction,
    component_walsh_matrix,
    components,
    coordinates,
    gwht,
)
from .hadamard import match_row, quadruple_condition, zero_sum_quadruples


@dataclass(frozen=True)
class PerUWitness:
    """Spectrum shape at one point: H_f(u) = sign * 2^{n/2} zeta^{...}.

    For even n the witness is (r, sign) with r indexing H_{2^{k-1}}; half is
    None.  For odd n, r indexes H_{2^{k-2}}, and half names the vanishing
    half of the component-spectrum vector ("low" or "high").
    """

    u: int
    r: int
    sign: int
    half: str | None = None

    def line(self) -> str:
        return f"{self.u} {self.r} {self.sign:+d} {self.half or '-'}"


@dataclass(frozen=True)
class GbentReport:
    """Verdict of one gbent route with per-point witness data."""

    verdict: bool
    method: str
    n: int
    k: int
    per_u: tuple[PerUWitness, ...]
    failures: tuple[int, ...]

    def __post_init__(self):
        assert self.verdict == (len(self.failures) == 0)

    def to_text(self) -> str:
        lines = [f"# method: {self.method}",
                 f"# verdict: {'gbent' if self.verdict else 'not gbent'}"]
        if self.failures:
            lines.append(f"# failures: {' '.join(str(u) for u in self.failures)}")
        lines.append("# u r sign half")
        lines.extend(w.line() for w in self.per_u)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "n": self.n,
            "k": self.k,
            "per_u": [{"u": w.u, "r": w.r, "sign": w.sign, "half": w.half}
                      for w in self.per_u],
            "failures": list(self.failures),
        }


def _report(method, f, per_u, failures) -> GbentReport:
    return GbentReport(not failures, method, f.n, f.k,
                       tuple(per_u), tuple(failures))


def is_gbent_direct(f: GeneralizedBooleanFunction) -> GbentReport:
    """Definition route: |H_f(u)|^2 = 2^n exactly at every u.

    Witnesses are read off the cyclotomic value itself.  Even n: H_f(u) must
    be +-2^{n/2} zeta^r (one nonzero basis coefficient).  Odd n: H_f(u) must
    be sign * 2^{(n-1)/2} (zeta^r +- zeta^{r+2^{k-2}}), the two-term form of
    sqrt(2) times a root of unity; equal coefficient signs mean the high
    half of the component spectrum vanishes, opposite signs the low half.
    A norm pass without the matching shape would contradict the structure
    of cyclotomic integers of absolute value 2^{n/2} and raises
    InternalInconsistency.
    """
    spec = gwht(f)
    nsq = spec.norm_squared_all()
    flat = (nsq[:, 0] == 1 << f.n) & (nsq[:, 1:] == 0).all(axis=1)
    failures = [u for u in range(1 << f.n) if not flat[u]]
    per_u = []
    if not failures:
        even = f.n % 2 == 0
        half_mag = None if even else 1 << ((f.n - 1) // 2)
        quarter = 1 << (f.k - 2) if f.k >= 2 else 0
        for u in range(1 << f.n):
            row = spec.coeffs[u]
            nz = np.flatnonzero(row)
            if even:
                if len(nz) != 1 or abs(int(row[nz[0]])) != 1 << (f.n // 2):
                    raise InternalInconsistency(
                        f"norm passed at u={u} but value is not +-2^(n/2) zeta^r")
                r = int(nz[0])
                per_u.append(PerUWitness(u, r, 1 if row[r] > 0 else -1))
            else:
                if (len(nz) != 2 or int(nz[1]) - int(nz[0]) != quarter
                        or int(nz[0]) >= quarter
                        or abs(int(row[nz[0]])) != half_mag
                        or abs(int(row[nz[1]])) != half_mag):
                    raise InternalInconsistency(
                        f"norm passed at u={u} but value is not sqrt(2) 2^((n-1)/2) zeta^j")
                r = int(nz[0])
                sign = 1 if row[r] > 0 else -1
                half = "high" if row[nz[1]] == row[nz[0]] else "low"
                per_u.append(PerUWitness(u, r, sign, half))
    return _report("direct", f, per_u, failures)


def _spectral_k1(f: GeneralizedBooleanFunction) -> GbentReport:
    # GB_n^2 is B_n: gbent means |W(u)| = 2^{n/2} everywhere, which is
    # bentness for even n and impossible for odd n
    w = wht(f.coordinate(0))
    per_u, failures = [], []
    if f.n % 2 == 0:
        c = 1 << (f.n // 2)
        for u in range(1 << f.n):
            if abs(w[u]) == c:
                per_u.append(PerUWitness(u, 0, 1 if w[u] > 0 else -1))
            else:
                failures.append(u)
    else:
        failures = list(range(1 << f.n))
    return _report("spectral", f, per_u if not failures else [], failures)


def is_gbent_spectral(f: GeneralizedBooleanFunction) -> GbentReport:
    """Component-spectra route.

    Even n: for every u the vector W(u) of component Walsh values must be
    +-2^{n/2} times a row of H_{2^{k-1}}.  Odd n: W(u) must vanish on
    exactly one half and be +-2^{(n+1)/2} times a row of H_{2^{k-2}} on the
    other.  For k=1 this degenerates to the plain bentness test.
    """
    if f.k == 1:
        return _spectral_k1(f)
    W = component_walsh_matrix(f)
    per_u, failures = [], []
    if f.n % 2 == 0:
        c = 1 << (f.n // 2)
        for u in range(1 << f.n):
            w = W[u]
            if not (np.abs(w) == c).all():
                failures.append(u)
                continue
            m = match_row(w // c)
            if m is None:
                failures.append(u)
            else:
                per_u.append(PerUWitness(u, m.r, m.sign))
    else:
        c = 1 << ((f.n + 1) // 2)
        half = 1 << (f.k - 2)
        for u in range(1 << f.n):
            w = W[u]
            low, high = w[:half], w[half:]
            low_zero, high_zero = not low.any(), not high.any()
            if low_zero == high_zero:
                failures.append(u)
                continue
            active, zero_name = (high, "low") if low_zero else (low, "high")
            if not (np.abs(active) == c).all():
                failures.append(u)
                continue
            m = match_row(active // c)
            if m is None:
                failures.append(u)
            else:
                per_u.append(PerUWitness(u, m.r, m.sign, zero_name))
    return _report("spectral", f, per_u if not failures else [], failures)


def is_gbent_quadruple(f: GeneralizedBooleanFunction) -> GbentReport:
    """Product-relation route, k >= 2.

    Even n: every component must be bent and, at every u, every zero-sum
    index quadruple must satisfy W_{g_j} W_{g_c} = W_{g_l} W_{g_v}.  Odd n:
    every component must be semi-bent, the zero set of W(u) must be exactly
    one half of the indices, and the product relations must hold on the
    active half.  Witnesses are reconstructed from the entries at power-of-
    two positions without any row matching.
    """
    if f.k < 2:
        raise InvalidK(f"quadruple route needs k >= 2, got k={f.k}")
    W = component_walsh_matrix(f)
    m = 1 << (f.k - 1)
    per_u, failures = [], []
    if f.n % 2 == 0:
        c = 1 << (f.n // 2)
        if not (np.abs(W) == c).all():
            bad = (np.abs(W) != c).any(axis=1)
            return _report("quadruple", f, [], np.flatnonzero(bad).tolist())
        quads = zero_sum_quadruples(m)
        for u in range(1 << f.n):
            w = W[u]
            if any(w[j] * w[cc] != w[l] * w[v] for j, cc, l, v in quads):
                failures.append(u)
                continue
            sign = 1 if w[0] > 0 else -1
            r = 0
            for s in range(f.k - 1):
                if sign * w[1 << s] < 0:
                    r |= 1 << s
            per_u.append(PerUWitness(u, r, sign))
    else:
        c = 1 << ((f.n + 1) // 2)
        semi_ok = ((W == 0) | (np.abs(W) == c)).all()
        if not semi_ok:
            bad = ~((W == 0) | (np.abs(W) == c)).all(axis=1)
            return _report("quadruple", f, [], np.flatnonzero(bad).tolist())
        half = 1 << (f.k - 2)
        quads = zero_sum_quadruples(half)
        for u in range(1 << f.n):
            w = W[u]
            low, high = w[:half], w[half:]
            low_zero, high_zero = not low.any(), not high.any()
            if low_zero == high_zero:
                failures.append(u)
                continue
            active, zero_name = (high, "low") if low_zero else (low, "high")
            if (active == 0).any():
                failures.append(u)
                continue
            if any(active[j] * active[cc] != active[l] * active[v]
                   for j, cc, l, v in quads):
                failures.append(u)
                continue
            sign = 1 if active[0] > 0 else -1
            r = 0
            for s in range(f.k - 2):
                if sign * active[1 << s] < 0:
                    r |= 1 << s
            per_u.append(PerUWitness(u, r, sign, zero_name))
    return _report("quadruple", f, per_u if not failures else [], failures)


def gbent_reports(f: GeneralizedBooleanFunction) -> tuple[GbentReport, ...]:
    """All applicable routes: three for k >= 2, two for k = 1."""
    reports = [is_gbent_direct(f), is_gbent_spectral(f)]
    if f.k >= 2:
        reports.append(is_gbent_quadruple(f))
    return tuple(reports)


def is_gbent(f: GeneralizedBooleanFunction) -> bool:
    """Consensus verdict; raises InternalInconsistency if routes disagree."""
    reports = gbent_reports(f)
    verdicts = {r.verdict for r in reports}
    if len(verdicts) != 1:
        raise InternalInconsistency(
            "gbent routes disagree: "
            + ", ".join(f"{r.method}={r.verdict}" for r in reports))
    return reports[0].verdict


# -- affine (semi-)bent space structure --------------------------------------


def _majority(a: BooleanFunction, b: BooleanFunction, c: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(a.n, (a.table & b.table) ^ (a.table & c.table)
                           ^ (b.table & c.table))


def _is_bent(g: BooleanFunction) -> bool:
    if g.n % 2:
        return False
    return bool((np.abs(wht(g).values) == 1 << (g.n // 2)).all())


def _is_semibent_valued(g: BooleanFunction) -> bool:
    # Walsh values within {0, +-2^{(n+1)/2}}; unlike the minimal-s
    # classification this accepts affine functions only at n = 1
    if g.n % 2 == 0:
        return False
    w = wht(g).values
    c = 1 << ((g.n + 1) // 2)
    return bool(((w == 0) | (np.abs(w) == c)).all())


@dataclass(frozen=True)
class BentSpaceReport:
    """Structure of the component affine space A = a_{k-1} + <a_0..a_{k-2}>.

    Even n: is_affine_bent_space (all members bent), dual_sum_closed
    (h_j* + h_c* + h_l* + h_v* = 0 on every zero-sum quadruple), and
    mesnager_closed (every distinct-triple majority is bent).  Odd n:
    is_affine_bent_space means all members semi-bent, mesnager_closed means
    all triple majorities semi-bent, and odd_split_subspace is the found
    hyperplane mask c realizing the per-u vanishing split (component index
    i is in the subspace iff popcount(i & c) is even), or None.

    For even n, all_hold is equivalent to gbentness of f.  For odd n the
    structure is representation-independent: all_hold with a split mask
    other than 2^{k-2} certifies a function that becomes gbent after the
    low coordinates are re-adapted to the found subspace, while f as given
    is gbent only when the mask is the standard 2^{k-2}.
    """

    n: int
    k: int
    is_affine_bent_space: bool
    dual_sum_closed: bool | None
    mesnager_closed: bool
    odd_split_subspace: int | None

    @property
    def all_hold(self) -> bool:
        if self.n % 2 == 0:
            return bool(self.is_affine_bent_space and self.dual_sum_closed
                        and self.mesnager_closed)
        return bool(self.is_affine_bent_space and self.mesnager_closed
                    and self.odd_split_subspace is not None)


def bent_space_report(f: GeneralizedBooleanFunction) -> BentSpaceReport:
    """Check the component family against the affine-space characterizations."""
    if f.k < 2:
        raise InvalidK(f"bent space structure needs k >= 2, got k={f.k}")
    fam = list(components(f))
    m = len(fam)
    even = f.n % 2 == 0
    member_ok = _is_bent if even else _is_semibent_valued
    is_space = all(member_ok(g) for g in fam)

    dual_sum_closed: bool | None = None
    if even:
        dual_sum_closed = False
        if is_space:
            duals = [dual(g) for g in fam]
            dual_sum_closed = all(
                (duals[j] ^ duals[c] ^ duals[l] ^ duals[v]).weight() == 0
                for j, c, l, v in zero_sum_quadruples(m))

    mesnager_closed = all(
        member_ok(_majority(fam[i], fam[j], fam[l]))
        for i, j, l in itertools.combinations(range(m), 3)) if is_space else False
    if m < 3:
        mesnager_closed = is_space

    split_mask: int | None = None
    if not even:
        W = component_walsh_matrix(f)
        zero_sets = [frozenset(np.flatnonzero(W[u] == 0).tolist())
                     for u in range(1 << f.n)]
        all_indices = frozenset(range(m))
        # prefer the hyperplane of the standard representation <a_0..a_{k-3}>
        candidates = [1 << (f.k - 2)] + [c for c in range(1, m) if c != 1 << (f.k - 2)]
        for c in candidates:
            inside = frozenset(i for i in range(m) if bin(i & c).count("1") % 2 == 0)
            outside = all_indices - inside
            if all(z in (inside, outside) for z in zero_sets):
                split_mask = c
                break
    return BentSpaceReport(f.n, f.k, is_space, dual_sum_closed,
                           mesnager_closed, split_mask)


def carlet_walsh_identity(g0: BooleanFunction, g1: BooleanFunction,
                          g2: BooleanFunction, g3: BooleanFunction) -> WalshSpectrum:
    """Spectrum of the majority g0 g1 + g0 g2 + g1 g2 from the four spectra.

    Requires g0 + g1 + g2 + g3 = 0; then the majority function's Walsh
    transform is (W_{g0} + W_{g1} + W_{g2} - W_{g3}) / 2 pointwise.
    """
    if (g0 ^ g1 ^ g2 ^ g3).weight() != 0:
        raise NotZeroSum("the four functions must XOR to zero")
    total = (wht(g0).values + wht(g1).values + wht(g2).values - wht(g3).values)
    if (total & 1).any():
        raise InternalInconsistency("majority Walsh identity sum is odd")
    return WalshSpectrum(g0.n, total >> 1)


# -- Z_q-bentness and relative difference sets -------------------------------


@dataclass(frozen=True)
class ZqBentReport:
    """Z_q-bent verdict with both decision routes spelled out.

    per_a[a-1] is the gbent verdict of (a f) mod 2^k for a = 1..2^k-1;
    per_t[t] is the gbent verdict of the truncation to GB_n^{2^{k-t}} for
    t = 0..k-1.  The two routes are equivalent and are both computed.
    """

    verdict: bool
    per_a: tuple[bool, ...]
    per_t: tuple[bool, ...]


def is_zq_bent(f: GeneralizedBooleanFunction) -> ZqBentReport:
    """Decide Z_q-bentness (even n) by multiples and by truncations.

    Route A follows the definition: (a f) mod 2^k must be gbent for every
    nonzero a.  Route B checks that every truncation f mod 2^{k-t} is gbent
    in GB_n^{2^{k-t}}.  Disagreement raises InternalInconsistency.
    """
    if f.n % 2:
        raise OddN("Z_q-bentness is defined here for even n only")
    per_a = tuple(is_gbent_direct(f.scale(a)).verdict
                  for a in range(1, 1 << f.k))
    per_t = tuple(is_gbent_direct(f.truncate(t)).verdict for t in range(f.k))
    if all(per_a) != all(per_t):
        raise InternalInconsistency(
            f"multiple route says {all(per_a)}, truncation route says {all(per_t)}")
    return ZqBentReport(all(per_a), per_a, per_t)


def coordinates_span_bent(f: GeneralizedBooleanFunction) -> bool:
    """True iff every nonzero F_2-combination of coordinates is bent."""
    coords = coordinates(f)
    for mask in range(1, 1 << f.k):
        g = BooleanFunction.constant(f.n)
        for j in range(f.k):
            if (mask >> j) & 1:
                g = g ^ coords[j]
        if not _is_bent(g):
            return False
    return True


def verify_rds(f: GeneralizedBooleanFunction) -> bool:
    """Exact relative-difference-set check for the graph of f.

    The graph {(x, f(x))} is a (2^n, 2^k, 2^n, 2^{n-k}) relative difference
    set in V_n x Z_{2^k} iff for every d != 0 the multiset
    {f(x) - f(x + d) mod 2^k} takes each value exactly 2^{n-k} times;
    differences with vanishing V_n part never occur off the diagonal.
    """
    if f.n % 2:
        raise OddN("relative difference set check is defined for even n")
    size = 1 << f.n
    if size > 1 << 16:
        raise TooLarge(f"2^n = {size} exceeds the counting cap 2^16")
    q = 1 << f.k
    lam, rem = divmod(size, q)
    if rem:
        return False
    x = np.arange(size)
    for d in range(1, size):
        diffs = (f.values - f.values[x ^ d]) % q
        if not (np.bincount(diffs, minlength=q) == lam).all():
            return False
    return True
