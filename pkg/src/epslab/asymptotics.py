"""Length sequences attached to an ideal and estimates of their limits.

All normalizations use d = dim R and exact rationals: a record's
``normalized`` value is d! * length / index^d, so its limit is the epsilon
(or Amao) multiplicity itself rather than the raw limit of length / index^d.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .length import count_levels, length
from .ring import (
    nilradical,
    r_add,
    r_intersect,
    r_multiply,
    r_power,
    r_saturate,
)


class FamilyKind(enum.Enum):
    EPSILON_CORE = "EpsilonCore"
    MODN_OUTER = "ModN_outer"
    MODN_SAT = "ModN_sat"
    CORRECTION = "Correction"
    NIL_PART = "NilPart"
    AMAO_INNER = "AmaoInner"
    FILT_I = "FiltI"
    FILT_J = "FiltJ"


@dataclass(frozen=True)
class SequenceRecord:
    family: FamilyKind
    n: int | None
    m: int | None
    k: int | None
    length: int
    normalized: Fraction

    @property
    def index(self):
        return self.k if self.k is not None else self.n


def worker_count():
    try:
        return max(1, int(os.environ.get("EPSLAB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Order-preserving map over a thread pool sized by EPSLAB_THREADS."""
    items = list(items)
    workers = worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def normalize(length_value, index, d):
    if index <= 0:
        raise ValueError("index must be positive")
    return Fraction(factorial(d) * length_value, index**d)


# -- ideal families ---------------------------------------------------------

class IdealFamily:
    """Memoized powers and saturations of one ideal in one ring."""

    def __init__(self, ideal):
        self.ring = ideal.ring
        self.ideal = ideal
        self.N = nilradical(self.ring)
        self._powers = {0: self.ring.unit()}
        self._cache = {}

    def power(self, n):
        if n not in self._powers:
            top = max(self._powers)
            cur = self._powers[top]
            while top < n:
                cur = r_multiply(cur, self.ideal)
                top += 1
                self._powers[top] = cur
        return self._powers[n]

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def sat_power(self, n):
        """(I^n)^sat"""
        return self._memo(("sat", n), lambda: r_saturate(self.power(n)))

    def power_plus_N(self, n):
        """I^n + N"""
        return self._memo(("pN", n), lambda: r_add(self.power(n), self.N))

    def sat_power_plus_N(self, n):
        """(I^n)^sat + N, the filtration I'_n"""
        return self._memo(("satpN", n), lambda: r_add(self.sat_power(n), self.N))

    def sat_of_power_plus_N(self, n):
        """(I^n + N)^sat, the filtration J'_n"""
        return self._memo(("satOfpN", n), lambda: r_saturate(self.power_plus_N(n)))

    def sat_power_pow(self, m, k):
        """[(I^m)^sat]^k"""
        return self._memo(("satpow", m, k), lambda: r_power(self.sat_power(m), k))

    def sat_of_pN_pow(self, m, k):
        """[(I^m + N)^sat]^k"""
        return self._memo(("satOfpNpow", m, k), lambda: r_power(self.sat_of_power_plus_N(m), k))

    def pair(self, family, n=None, m=None, k=None):
        """The (smaller, larger) pair of R-ideals whose quotient a family measures."""
        N = self.N
        if family is FamilyKind.EPSILON_CORE:
            return self.power(n), self.sat_power(n)
        if family is FamilyKind.MODN_OUTER:
            return self.power_plus_N(n), self.sat_power_plus_N(n)
        if family is FamilyKind.MODN_SAT:
            return self.power_plus_N(n), self.sat_of_power_plus_N(n)
        if family is FamilyKind.CORRECTION:
            return self.sat_power_plus_N(n), self.sat_of_power_plus_N(n)
        if family is FamilyKind.NIL_PART:
            return r_intersect(self.power(n), N), r_intersect(self.sat_power(n), N)
        if family is FamilyKind.AMAO_INNER:
            return self.power(m * k), self.sat_power_pow(m, k)
        if family is FamilyKind.FILT_I:
            return self.power_plus_N(m * k), r_add(self.sat_power_pow(m, k), N)
        if family is FamilyKind.FILT_J:
            return self.power_plus_N(m * k), r_add(self.sat_of_pN_pow(m, k), N)
        raise ValueError(f"unknown family {family}")


class RecordStore:
    """Append-only table of computed records keyed by (family, ring, ideal, indices).

    Lets a sequence be extended without recomputing earlier cells.
    """

    def __init__(self):
        self._records = {}

    @staticmethod
    def key(family, ideal, n, m, k):
        ring = ideal.ring
        return (family.value, ring.names, ring.Q.gens, ideal.rep.gens, n, m, k)

    def get(self, key):
        return self._records.get(key)

    def put(self, key, record):
        self._records.setdefault(key, record)

    def __len__(self):
        return len(self._records)

    def rows(self):
        return [self._records[key] for key in sorted(self._records, key=repr)]


def _family_for(ideal, families):
    if families is None:
        return IdealFamily(ideal)
    return families


def family_record(fam, family, n=None, m=None, k=None, store=None):
    key = RecordStore.key(family, fam.ideal, n, m, k) if store is not None else None
    if store is not None:
        hit = store.get(key)
        if hit is not None:
            return hit
    small, big = fam.pair(family, n=n, m=m, k=k)
    value = length(small, big)
    index = k if k is not None else n
    rec = SequenceRecord(family, n, m, k, value, normalize(value, index, fam.ring.dim_ring))
    if store is not None:
        store.put(key, rec)
    return rec


def _warm(fam, top):
    # powers are built sequentially so that parallel cells only read the cache
    fam.power(top)


def family_sequence(ideal, family, nmax, *, families=None, store=None):
    fam = _family_for(ideal, families)
    _warm(fam, nmax)
    return parallel_map(lambda n: family_record(fam, family, n=n, store=store), range(1, nmax + 1))


def epsilon_sequence(ring, ideal, nmax, *, families=None, store=None):
    """Records of length((I^n)^sat / I^n) for n = 1..nmax."""
    if ideal.ring != ring:
        raise ValueError("ideal does not belong to ring")
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    return family_sequence(ideal, FamilyKind.EPSILON_CORE, nmax, families=families, store=store)


# -- limit estimation -------------------------------------------------------

@dataclass(frozen=True)
class Diagnostics:
    finite_diff_prev: Fraction
    tail_spread: Fraction
    naive_nonincreasing: bool
    naive_nondecreasing: bool
    converged: bool


@dataclass(frozen=True)
class LimitEstimate:
    """Three estimates of lim d! * l_n / n^d from a finite tail."""

    d: int
    naive_last: Fraction
    finite_diff: Fraction
    richardson: Fraction
    diagnostics: Diagnostics

    @property
    def raw(self):
        """Estimate of lim l_n / n^d (without the d! factor)."""
        return self.finite_diff / factorial(self.d)


def forward_difference(values, d):
    """d-th forward difference over the last d+1 entries of ``values``."""
    tail = values[-(d + 1):]
    return sum((-1) ** (d - j) * comb(d, j) * tail[j] for j in range(d + 1))


def richardson_step(n, a_n, a_prev):
    """Eliminate the 1/n term of a_n = c + a/n using a_n and a_{n-1}."""
    return n * a_n - (n - 1) * a_prev


def relative_gap(a, b):
    a, b = Fraction(a), Fraction(b)
    if a == b:
        return Fraction(0)
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale


def _as_pairs(seq):
    pairs = []
    for i, item in enumerate(seq):
        if isinstance(item, SequenceRecord):
            pairs.append((item.index, item.length))
        elif isinstance(item, tuple):
            pairs.append((int(item[0]), item[1]))
        else:
            pairs.append((i + 1, item))
    return pairs


def estimate_limit(seq, d, tolerance=Fraction(1, 20)):
    """Estimate the normalized limit of a length sequence.

    ``seq`` holds (index, length) pairs with consecutive indices, records, or
    bare lengths indexed from 1. At least d + 2 entries are needed so that the
    finite difference can be compared across the last two windows.
    """
    pairs = _as_pairs(seq)
    if len(pairs) < d + 2:
        raise ValueError(f"need at least {d + 2} entries to estimate a degree-{d} limit")
    idx = [p[0] for p in pairs]
    if any(b - a != 1 for a, b in zip(idx, idx[1:])):
        raise ValueError("indices must be consecutive")
    if idx[0] < 1:
        raise ValueError("indices must be positive")
    vals = [Fraction(p[1]) for p in pairs]
    fact = factorial(d)
    naive = [fact * v / Fraction(i) ** d for i, v in zip(idx, vals)]
    fd_last = forward_difference(vals, d)
    fd_prev = forward_difference(vals[:-1], d)
    rich = richardson_step(idx[-1], naive[-1], naive[-2])
    tail = naive[-(d + 2):]
    spread = relative_gap(fd_last, fd_prev)
    diag = Diagnostics(
        finite_diff_prev=fd_prev,
        tail_spread=spread,
        naive_nonincreasing=all(a >= b for a, b in zip(tail, tail[1:])),
        naive_nondecreasing=all(a <= b for a, b in zip(tail, tail[1:])),
        converged=spread <= tolerance,
    )
    return LimitEstimate(d, naive[-1], fd_last, rich, diag)


def prefix_estimates(records, d):
    """Per-row (naive, finite_diff, richardson) using only rows up to that index.

    Entries are None where the window is too short.
    """
    vals = [r.length for r in records]
    idx = [r.index for r in records]
    out = []
    fact = factorial(d)
    for pos, (i, v) in enumerate(zip(idx, vals)):
        naive = Fraction(fact * v, i**d)
        fd = forward_difference(vals[: pos + 1], d) if pos >= d else None
        rich = None
        if pos >= 1:
            prev = Fraction(fact * vals[pos - 1], idx[pos - 1] ** d)
            rich = richardson_step(i, naive, prev)
        out.append((naive, None if fd is None else Fraction(fd), rich))
    return out


# -- Amao grid --------------------------------------------------------------

@dataclass
class AmaoGrid:
    d: int
    records: list
    estimates: dict = field(default_factory=dict)

    def amao(self, m):
        """Estimate of a(I^m, (I^m)^sat)."""
        return self.estimates[m].finite_diff

    def outer(self):
        """[(m, a(m), a(m) / m^d)] for every m in the grid."""
        return [(m, est.finite_diff, est.finite_diff / Fraction(m) ** self.d)
                for m, est in sorted(self.estimates.items())]

    def inner(self, m):
        return [r for r in self.records if r.m == m]


def amao_grid(ring, ideal, mmax, kmax, *, families=None, store=None, tolerance=Fraction(1, 20)):
    """Inner sequences length([(I^m)^sat]^k / I^(mk)) for m <= mmax, k <= kmax."""
    if mmax < 1 or kmax < 1:
        raise ValueError("mmax and kmax must be >= 1")
    fam = _family_for(ideal, families)
    d = ring.dim_ring
    _warm(fam, mmax * kmax)
    for m in range(1, mmax + 1):
        fam.sat_power(m)
    cells = [(m, k) for m in range(1, mmax + 1) for k in range(1, kmax + 1)]
    records = parallel_map(
        lambda mk: family_record(fam, FamilyKind.AMAO_INNER, m=mk[0], k=mk[1], store=store), cells
    )
    grid = AmaoGrid(d, records)
    if kmax >= d + 2:
        for m in range(1, mmax + 1):
            grid.estimates[m] = estimate_limit(grid.inner(m), d, tolerance)
    return grid


def filtration_grid(ring, ideal, mmax, kmax, *, families=None, store=None):
    """Records of the FiltI(m) and FiltJ(m) families over the (m, k) grid.

    FiltI(m)_k = length(([(I^m)^sat]^k + N) / (I^(mk) + N)) and
    FiltJ(m)_k = length(([(I^m + N)^sat]^k + N) / (I^(mk) + N)).
    """
    fam = _family_for(ideal, families)
    _warm(fam, mmax * kmax)
    cells = [(f, m, k) for f in (FamilyKind.FILT_I, FamilyKind.FILT_J)
             for m in range(1, mmax + 1) for k in range(1, kmax + 1)]
    return parallel_map(lambda c: family_record(fam, c[0], m=c[1], k=c[2], store=store), cells)


# -- decomposition ----------------------------------------------------------

DECOMPOSITION_FAMILIES = (
    FamilyKind.EPSILON_CORE,
    FamilyKind.MODN_OUTER,
    FamilyKind.MODN_SAT,
    FamilyKind.CORRECTION,
    FamilyKind.NIL_PART,
)


@dataclass
class DecompositionTable:
    nmax: int
    sequences: dict

    def lengths(self, family):
        return [r.length for r in self.sequences[family]]

    def nilpart_identity(self):
        """Per n: EpsilonCore == ModN_outer + NilPart."""
        core, outer, nil = (self.lengths(f) for f in (
            FamilyKind.EPSILON_CORE, FamilyKind.MODN_OUTER, FamilyKind.NIL_PART))
        return [c == o + z for c, o, z in zip(core, outer, nil)]

    def correction_identity(self):
        """Per n: ModN_outer == ModN_sat - Correction."""
        outer, msat, corr = (self.lengths(f) for f in (
            FamilyKind.MODN_OUTER, FamilyKind.MODN_SAT, FamilyKind.CORRECTION))
        return [o == s - c for o, s, c in zip(outer, msat, corr)]

    def rows(self):
        for n in range(1, self.nmax + 1):
            yield n, {f: self.sequences[f][n - 1] for f in DECOMPOSITION_FAMILIES}


def decomposition_sequences(ring, ideal, nmax, *, families=None, store=None):
    fam = _family_for(ideal, families)
    _warm(fam, nmax)
    cells = [(f, n) for f in DECOMPOSITION_FAMILIES for n in range(1, nmax + 1)]
    recs = parallel_map(lambda c: family_record(fam, c[0], n=c[1], store=store), cells)
    seqs = {f: [r for r in recs if r.family is f] for f in DECOMPOSITION_FAMILIES}
    return DecompositionTable(nmax, seqs)


# -- Swanson-type constants -------------------------------------------------

@dataclass(frozen=True)
class SwansonResult:
    constant: int | None
    verified_range: int
    found: bool
    top_degrees: tuple = ()


def top_degree(small, big):
    """Largest degree of a monomial in big but not small, or -1 if they are equal.

    For small inside big with finite-length quotient, big and small agree after
    intersecting with m^j exactly when j exceeds this degree.
    """
    if small == big:
        return -1
    counts, _ = count_levels(small.rep, big.rep)
    return max(e for e, c in enumerate(counts) if c)


def truncations_agree(small, big, j):
    """Direct check of big ∩ m^j == small ∩ m^j in the ring."""
    mj = small.ring.maximal_power(j)
    return r_intersect(big, mj) == r_intersect(small, mj)


def _linear_constant(pairs, nmax, cmax):
    tops = tuple(top_degree(s, b) for s, b in pairs)
    # the equality at n holds for constant c iff top < c * n
    need = max((t // n + 1 for n, t in enumerate(tops, start=1)), default=1)
    need = max(need, 1)
    if need <= cmax:
        return SwansonResult(need, nmax, True, tops)
    return SwansonResult(None, nmax, False, tops)


def swanson_search(ring, ideal, nmax, bmax, *, families=None):
    """Least b <= bmax with (I^n)^sat ∩ m^(bn) = I^n ∩ m^(bn) for all n <= nmax."""
    if nmax < 1 or bmax < 1:
        raise ValueError("bounds must be >= 1")
    fam = _family_for(ideal, families)
    pairs = [(fam.power(n), fam.sat_power(n)) for n in range(1, nmax + 1)]
    return _linear_constant(pairs, nmax, bmax)


def swanson_c_search(ring, ideal, nmax, cmax, *, families=None):
    """Least c <= cmax with (I^n+N)^sat ∩ m^(cn) = ((I^n)^sat + N) ∩ m^(cn) for n <= nmax."""
    if nmax < 1 or cmax < 1:
        raise ValueError("bounds must be >= 1")
    fam = _family_for(ideal, families)
    pairs = [(fam.sat_power_plus_N(n), fam.sat_of_power_plus_N(n)) for n in range(1, nmax + 1)]
    return _linear_constant(pairs, nmax, cmax)

