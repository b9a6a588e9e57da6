"""Monomials and monomial ideals in a polynomial ring k[x_1, ..., x_r].

A monomial is an exponent vector. Internally every routine works on plain
tuples of ints; :class:`Monomial` is a thin tuple subclass for callers who
want ``.degree`` and a readable repr. A :class:`MonomialIdeal` always stores
its minimal generators (the divisibility antichain) in graded lexicographic
order, so two ideals are equal exactly when their generator tuples are.

Exponents are Python ints, bounded by ``MAX_EXPONENT`` so that results stay
representable in 32-bit machine words if exported.
"""
from __future__ import annotations

from itertools import combinations

from .errors import ArityMismatch, UnitIdealError

MAX_EXPONENT = 2**31 - 1
MAX_DIMENSION_ARITY = 12


class Monomial(tuple):
    """Exponent vector ``(a_1, ..., a_r)`` standing for x_1^a_1 ... x_r^a_r."""

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, arity):
        return cls((0,) * arity)

    @classmethod
    def var(cls, arity, i):
        if not 0 <= i < arity:
            raise IndexError(f"variable index {i} out of range for arity {arity}")
        return cls(tuple(1 if j == i else 0 for j in range(arity)))

    @property
    def arity(self):
        return len(self)

    @property
    def degree(self):
        return sum(self)

    def __mul__(self, other):
        return Monomial(mono_mul(self, other))

    def __repr__(self):
        return f"Monomial({format_monomial(self)})"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def divides(a, b):
    """True when the monomial ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _order_key(u):
    # graded lex: lower degree first, then x_1 > x_2 > ... within a degree
    return (sum(u), tuple(-e for e in u))


def default_names(arity):
    if arity <= 4:
        return ("x", "y", "z", "w")[:arity]
    return tuple(f"x{i + 1}" for i in range(arity))


def format_monomial(u, names=None):
    """Canonical text form, e.g. ``x^2*y``; the identity prints as ``1``."""
    names = names or default_names(len(u))
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _check_arity(arity, gens):
    for g in gens:
        if len(g) != arity:
            raise ArityMismatch(f"monomial {tuple(g)} has arity {len(g)}, expected {arity}")


def _check_bound(gens):
    for g in gens:
        if max(g, default=0) > MAX_EXPONENT:
            raise OverflowError(f"exponent in {g} exceeds {MAX_EXPONENT}")


def _minimal(cands):
    """Divisibility antichain of ``cands`` (iterable of tuples), canonical order."""
    uniq = sorted(set(cands), key=_order_key)
    kept = []
    for c in uniq:
        # sorted by degree, so only an earlier element can divide c
        for g in kept:
            if divides(g, c):
                break
        else:
            kept.append(c)
    return tuple(kept)


class MonomialIdeal:
    """Ideal of k[x_1..x_r] generated by monomials.

    Immutable. ``gens`` holds the minimal generators as plain tuples in graded
    lexicographic order; the zero ideal has no generators and the unit ideal
    has the single generator ``(0, ..., 0)``.
    """

    __slots__ = ("arity", "gens", "_hash")

    def __init__(self, arity, gens=(), *, _canonical=False):
        if arity < 1:
            raise ValueError("arity must be positive")
        if _canonical:
            self.gens = gens
        else:
            gens = [tuple(int(e) for e in g) for g in gens]
            _check_arity(arity, gens)
            for g in gens:
                if min(g, default=0) < 0:
                    raise ValueError(f"negative exponent in {g}")
            _check_bound(gens)
            self.gens = _minimal(gens)
        self.arity = arity
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, arity):
        return cls(arity, (), _canonical=True)

    @classmethod
    def unit(cls, arity):
        return cls(arity, ((0,) * arity,), _canonical=True)

    @classmethod
    def maximal(cls, arity):
        """The ideal (x_1, ..., x_r) of all variables."""
        return cls(arity, [tuple(int(i == j) for j in range(arity)) for i in range(arity)])

    @classmethod
    def _from_minimal(cls, arity, gens):
        return cls(arity, gens, _canonical=True)

    # -- predicates -------------------------------------------------------
    @property
    def generators(self):
        return tuple(Monomial(g) for g in self.gens)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def max_degree(self):
        return max((sum(g) for g in self.gens), default=0)

    def __contains__(self, u):
        return member(u, self)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.arity == other.arity and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.gens))
        return self._hash

    def __le__(self, other):
        return contains(other, self)

    def __ge__(self, other):
        return contains(self, other)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, n):
        return power(self, n)

    def __and__(self, other):
        return intersect(self, other)

    def format(self, names=None):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self.format()}"

    def __reduce__(self):
        return (MonomialIdeal, (self.arity, self.gens))


def _same_arity(*ideals):
    a = ideals[0].arity
    for other in ideals[1:]:
        if other.arity != a:
            raise ArityMismatch(f"arity {other.arity} does not match {a}")
    return a


def minimalize(gens, arity=None):
    """Return the ideal generated by ``gens`` in canonical minimal form."""
    gens = [tuple(g) for g in gens]
    if arity is None:
        if not gens:
            raise ValueError("arity is required for an empty generator set")
        arity = len(gens[0])
    return MonomialIdeal(arity, gens)


def member(u, ideal):
    """True when some generator of ``ideal`` divides ``u``."""
    if len(u) != ideal.arity:
        raise ArityMismatch(f"monomial arity {len(u)} does not match {ideal.arity}")
    for g in ideal.gens:
        if divides(g, u):
            return True
    return False


def contains(big, small):
    """True when ``small`` is a subset of ``big``."""
    _same_arity(big, small)
    return all(member(g, big) for g in small.gens)


def equals(a, b):
    _same_arity(a, b)
    return a.gens == b.gens


def add(a, b):
    arity = _same_arity(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return MonomialIdeal._from_minimal(arity, _minimal(a.gens + b.gens))


def multiply(a, b):
    arity = _same_arity(a, b)
    gens = _minimal(mono_mul(g, h) for g in a.gens for h in b.gens)
    _check_bound(gens)
    return MonomialIdeal._from_minimal(arity, gens)


def power(ideal, n):
    """``ideal**n`` by repeated multiplication; ``ideal**0`` is the unit ideal."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = MonomialIdeal.unit(ideal.arity)
    for _ in range(n):
        result = multiply(result, ideal)
    return result


def intersect(a, b):
    arity = _same_arity(a, b)
    return MonomialIdeal._from_minimal(arity, _minimal(lcm(g, h) for g in a.gens for h in b.gens))


def _colon_monomial(ideal, u):
    return _minimal(tuple(x - y if x > y else 0 for x, y in zip(g, u)) for g in ideal.gens)


def colon(a, b):
    """``a : b`` = {f : f*b in a}; colon by the zero ideal is the unit ideal."""
    arity = _same_arity(a, b)
    result = MonomialIdeal.unit(arity)
    for u in b.gens:
        result = intersect(result, MonomialIdeal._from_minimal(arity, _colon_monomial(a, u)))
    return result


def saturate_var(ideal, i):
    """``ideal : x_i^inf``: drop the i-th exponent of every generator."""
    if not 0 <= i < ideal.arity:
        raise IndexError(f"variable index {i} out of range for arity {ideal.arity}")
    return MonomialIdeal._from_minimal(
        ideal.arity, _minimal(g[:i] + (0,) + g[i + 1:] for g in ideal.gens)
    )


def saturate_max(ideal):
    """Saturation ``ideal : m^inf`` for m = (x_1..x_r).

    Iterates ``J <- J : m`` to a fixpoint. Returns ``(saturation, t)`` where
    ``t`` is the least exponent with ``ideal : m^t`` already saturated.
    """
    m = MonomialIdeal.maximal(ideal.arity)
    current = ideal
    t = 0
    while True:
        nxt = colon(current, m)
        if nxt == current:
            return current, t
        current = nxt
        t += 1


def saturate_by_vars(ideal):
    """Saturation computed as the intersection of the variable-wise saturations."""
    result = MonomialIdeal.unit(ideal.arity)
    for i in range(ideal.arity):
        result = intersect(result, saturate_var(ideal, i))
    return result


def saturate(ideal):
    return saturate_max(ideal)[0]


def radical(ideal):
    return MonomialIdeal._from_minimal(
        ideal.arity, _minimal(tuple(1 if e else 0 for e in g) for g in ideal.gens)
    )


def dimension(ideal):
    """Krull dimension of S/ideal: arity minus the minimum vertex cover of the supports."""
    if ideal.is_unit():
        raise UnitIdealError("the quotient by the unit ideal is the zero ring")
    r = ideal.arity
    if r > MAX_DIMENSION_ARITY:
        raise ValueError(f"dimension search limited to arity <= {MAX_DIMENSION_ARITY}")
    supports = [frozenset(j for j, e in enumerate(g) if e) for g in ideal.gens]
    for size in range(r + 1):
        for cover in combinations(range(r), size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return r - size
    raise AssertionError("unreachable: the full variable set covers every support")
