"""Monomial quotient rings R = S/Q and their ideals.

Every ideal of R is carried by its ambient representative, an ideal of S
containing Q. Each ring-level operation is one ambient operation followed by
adding Q back, which keeps a single arithmetic core.

The graded ring S/Q is used in place of its localization at the homogeneous
maximal ideal (and the completion of that): all modules measured here have
finite length and are supported at the origin, where the lengths agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import monomial as mc
from .errors import ArityMismatch, RingMismatch, UnitIdealError
from .monomial import MonomialIdeal


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """R = k[names]/Q with its nilradical data precomputed."""

    arity: int
    names: tuple
    Q: MonomialIdeal
    nilrad_ambient: MonomialIdeal = field(init=False)
    dim_ring: int = field(init=False)
    ann_N: MonomialIdeal = field(init=False)
    dim_nilradical: int = field(init=False)

    def __post_init__(self):
        if self.Q.arity != self.arity:
            raise ArityMismatch(f"quotient ideal arity {self.Q.arity} != {self.arity}")
        if len(self.names) != self.arity:
            raise ArityMismatch(f"{len(self.names)} names for arity {self.arity}")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be unique: {self.names}")
        if self.Q.is_unit():
            raise UnitIdealError("Q must be a proper ideal")
        rad = mc.radical(self.Q)
        object.__setattr__(self, "nilrad_ambient", rad)
        object.__setattr__(self, "dim_ring", mc.dimension(self.Q))
        ann = mc.colon(self.Q, rad)
        object.__setattr__(self, "ann_N", ann)
        # N = 0 has dimension -1 by convention
        dim_n = -1 if rad == self.Q else mc.dimension(ann)
        object.__setattr__(self, "dim_nilradical", dim_n)

    @property
    def is_reduced(self):
        """N = 0, i.e. the analytically unramified case."""
        return self.nilrad_ambient == self.Q

    @property
    def hypothesis_holds(self):
        """dim N < dim R."""
        return self.dim_nilradical < self.dim_ring

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.names == other.names and self.Q == other.Q

    def __hash__(self):
        return hash((self.names, self.Q))

    # convenience views
    def zero(self):
        return RingIdeal(self, self.Q)

    def unit(self):
        return RingIdeal(self, MonomialIdeal.unit(self.arity))

    def maximal(self):
        return RingIdeal(self, mc.add(MonomialIdeal.maximal(self.arity), self.Q))

    def maximal_power(self, j):
        return r_power(self.maximal(), j)

    def ideal(self, gens):
        return ideal_in_ring(self, gens)

    def reduction(self):
        """The reduced ring R/N = S/rad(Q)."""
        return QuotientRing(self.arity, self.names, self.nilrad_ambient)

    def format(self):
        base = "k[" + ",".join(self.names) + "]"
        if self.Q.is_zero():
            return base
        return f"{base}/{self.Q.format(self.names)}"

    def __repr__(self):
        return f"QuotientRing({self.format()})"


def make_ring(arity, names=None, Q=None):
    names = tuple(names) if names is not None else mc.default_names(arity)
    if Q is None:
        Q = MonomialIdeal.zero(arity)
    elif not isinstance(Q, MonomialIdeal):
        Q = MonomialIdeal(arity, Q)
    return QuotientRing(arity, names, Q)


class RingIdeal:
    """An ideal of a :class:`QuotientRing`, stored by an ambient representative."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        if rep.arity != ring.arity:
            raise ArityMismatch(f"representative arity {rep.arity} != ring arity {ring.arity}")
        if not mc.contains(rep, ring.Q):
            rep = mc.add(rep, ring.Q)
        self.ring = ring
        self.rep = rep

    def __eq__(self, other):
        if not isinstance(other, RingIdeal):
            return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __le__(self, other):
        _same_ring(self, other)
        return mc.contains(other.rep, self.rep)

    def __ge__(self, other):
        return other <= self

    def __add__(self, other):
        return r_add(self, other)

    def __mul__(self, other):
        return r_multiply(self, other)

    def __pow__(self, n):
        return r_power(self, n)

    def __and__(self, other):
        return r_intersect(self, other)

    def is_zero(self):
        return self.rep == self.ring.Q

    def is_unit(self):
        return self.rep.is_unit()

    def format(self):
        """Generators modulo Q (those of the representative not already in Q)."""
        gens = [g for g in self.rep.gens if not mc.member(g, self.ring.Q)]
        if not gens:
            return "(0)"
        return "(" + ", ".join(mc.format_monomial(g, self.ring.names) for g in gens) + ")"

    def __repr__(self):
        return f"RingIdeal{self.format()} in {self.ring.format()}"


def _same_ring(*ideals):
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring is not ring and other.ring != ring:
            raise RingMismatch("ideals live in different rings")
    return ring


def ideal_in_ring(ring, gens):
    gens = [tuple(g) for g in gens]
    mc._check_arity(ring.arity, gens)
    return RingIdeal(ring, MonomialIdeal(ring.arity, gens + list(ring.Q.gens)))


def r_add(a, b):
    ring = _same_ring(a, b)
    return RingIdeal(ring, mc.add(a.rep, b.rep))


def r_multiply(a, b):
    ring = _same_ring(a, b)
    return RingIdeal(ring, mc.add(mc.multiply(a.rep, b.rep), ring.Q))


def r_power(a, n):
    if n < 0:
        raise ValueError("exponent must be non-negative")
    # reducing mod Q after each step keeps generator sets small
    result = a.ring.unit()
    for _ in range(n):
        result = r_multiply(result, a)
    return result


def r_intersect(a, b):
    ring = _same_ring(a, b)
    return RingIdeal(ring, mc.add(mc.intersect(a.rep, b.rep), ring.Q))


def r_colon(a, b):
    ring = _same_ring(a, b)
    return RingIdeal(ring, mc.add(mc.colon(a.rep, b.rep), ring.Q))


def r_saturate(a):
    # the representative contains Q, hence so does its saturation
    return RingIdeal(a.ring, mc.saturate(a.rep))


def nilradical(ring):
    return RingIdeal(ring, ring.nilrad_ambient)


def image_mod_N(ideal):
    """The extension (I + N)/N as an ideal of the reduced ring R/N."""
    ring = ideal.ring
    reduced = ring if ring.is_reduced else ring.reduction()
    return RingIdeal(reduced, mc.add(ideal.rep, ring.nilrad_ambient))
