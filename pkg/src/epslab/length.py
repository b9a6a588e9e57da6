"""Exact lengths of quotients of monomial ideals.

For ideals B of R = S/Q contained in A, the quotient A/B has the standard
monomials of B lying in A as a k-basis, so its length is the number of
monomials in rep(A) minus rep(B).

Counting proceeds one degree at a time. A degree-e monomial of A \\ B is either
a generator of A or x_i * w with w of degree e - 1 also in A \\ B (if w were in
B, so would be x_i * w). So each level is built from the previous one plus
the generators of A of that degree, and once e is at least the largest
generator degree of A, an empty level means every later level is empty too.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from . import monomial as mc
from .errors import ContainmentError, InfiniteLength
from .ring import RingIdeal, _same_ring


class StopCertificate(enum.Enum):
    LEVEL_EMPTY_PAST_MAX_GEN_DEGREE = "LevelEmptyPastMaxGenDegree"
    BOTH_UNIT = "BothUnit"
    EQUAL_IDEALS = "EqualIdeals"


@dataclass(frozen=True)
class LengthResult:
    value: int
    degree_cutoff: int
    stop_certificate: StopCertificate

    def __int__(self):
        return self.value


def _reps(x):
    return x.rep if isinstance(x, RingIdeal) else x


def is_finite_colength_pair(B, A):
    """True when A/B has finite length, i.e. A lies in the saturation of B."""
    if isinstance(B, RingIdeal) and isinstance(A, RingIdeal):
        _same_ring(A, B)
    b, a = _reps(B), _reps(A)
    if not mc.contains(a, b):
        raise ContainmentError(f"{b.format()} is not contained in {a.format()}")
    if a == b:
        return True
    return mc.contains(mc.saturate(b), a)


def _by_degree(gens):
    out = {}
    for g in gens:
        out.setdefault(sum(g), []).append(g)
    return out


def count_levels(b, a):
    """Per-degree counts of monomials in ``a`` but not ``b``, plus the cutoff degree.

    ``a`` and ``b`` are ambient monomial ideals with b inside a and a/b of finite
    length. Returns ``(counts, cutoff)`` with ``counts[e]`` for e <= cutoff.
    """
    arity = a.arity
    gens_a = _by_degree(a.gens)
    maxdeg = a.max_degree()
    bgens = b.gens
    level = set()
    counts = []
    e = 0
    while True:
        nxt = set(gens_a.get(e, ()))
        for w in level:
            for i in range(arity):
                nxt.add(w[:i] + (w[i] + 1,) + w[i + 1:])
        level = set()
        for u in nxt:
            for g in bgens:
                if mc.divides(g, u):
                    break
            else:
                level.add(u)
        counts.append(len(level))
        if e >= maxdeg and not level:
            return counts, e
        e += 1


def length_quotient(B, A):
    """Length of A/B as a LengthResult.

    Raises ContainmentError when B is not inside A and InfiniteLength when the
    quotient is not of finite length.
    """
    if not is_finite_colength_pair(B, A):
        raise InfiniteLength(f"{_reps(A).format()} / {_reps(B).format()} has infinite length")
    b, a = _reps(B), _reps(A)
    if a.is_unit() and b.is_unit():
        return LengthResult(0, 0, StopCertificate.BOTH_UNIT)
    if a == b:
        return LengthResult(0, 0, StopCertificate.EQUAL_IDEALS)
    counts, cutoff = count_levels(b, a)
    return LengthResult(sum(counts), cutoff, StopCertificate.LEVEL_EMPTY_PAST_MAX_GEN_DEGREE)


def length(B, A):
    """Shorthand for ``length_quotient(B, A).value``."""
    return length_quotient(B, A).value


def monomials_of_degree(arity, e):
    for combo in combinations_with_replacement(range(arity), e):
        u = [0] * arity
        for i in combo:
            u[i] += 1
        yield tuple(u)


def hilbert_function(ideal, e):
    """Number of degree-e monomials outside ``ideal``."""
    ideal = _reps(ideal)
    if ideal.is_zero():
        return comb(e + ideal.arity - 1, ideal.arity - 1)
    return sum(1 for u in monomials_of_degree(ideal.arity, e) if not mc.member(u, ideal))


def length_by_hilbert(B, A, cutoff=None):
    """Length of A/B as the sum over degrees of HF(B, e) - HF(A, e).

    Independent of :func:`count_levels`. The default cutoff comes from the
    saturation exponent t of B: A lies in B : m^t, so every monomial of A of
    degree >= maxdeg(A) + t is already in B.
    """
    b, a = _reps(B), _reps(A)
    if cutoff is None:
        if not is_finite_colength_pair(B, A):
            raise InfiniteLength("quotient has infinite length")
        _, t = mc.saturate_max(b)
        cutoff = a.max_degree() + t
    return sum(hilbert_function(b, e) - hilbert_function(a, e) for e in range(cutoff + 1))
