"""Executable checks of the ideal identities and length equalities behind the
epsilon/Amao multiplicity results, on single instances and seeded random ones.

Identities that are finite statements (containments, exact sequences) are
checked exactly. Limit statements are compared through :func:`estimate_limit`
within a relative tolerance. A failing report always carries a witness that
:func:`replay_witness` can re-check from scratch.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import monomial as mc
from .asymptotics import (
    FamilyKind,
    IdealFamily,
    amao_grid,
    epsilon_sequence,
    estimate_limit,
    family_record,
    relative_gap,
)
from .errors import HypothesisViolation
from .length import length, length_by_hilbert, length_quotient
from .monomial import MonomialIdeal
from .ring import (
    QuotientRing,
    RingIdeal,
    ideal_in_ring,
    make_ring,
    r_colon,
    r_intersect,
    r_power,
    r_saturate,
)

DEFAULT_TOLERANCE = Fraction(1, 20)


@dataclass
class CheckReport:
    name: str
    instance: str
    passed: bool
    witness: dict | None = None
    skipped: bool = False
    details: dict = field(default_factory=dict)

    def line(self):
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return f"{status} {self.name} {self.instance}"


def _gens(ideal):
    return [list(g) for g in ideal.gens]


def ideal_witness(label, left, right):
    """Witness that two ambient ideals differ: a generator of one missing from the other."""
    for u in left.gens:
        if not mc.member(u, right):
            break
    else:
        u = next(g for g in right.gens if not mc.member(g, left))
    return {
        "kind": "ideal_equality",
        "label": label,
        "arity": left.arity,
        "left": _gens(left),
        "right": _gens(right),
        "monomial": list(u),
    }


def containment_witness(label, small, big):
    u = next(g for g in small.gens if not mc.member(g, big))
    return {
        "kind": "containment",
        "label": label,
        "arity": small.arity,
        "small": _gens(small),
        "big": _gens(big),
        "monomial": list(u),
    }


def length_witness(label, terms, expected_relation):
    """``terms`` maps a name to (small_gens, big_gens, length) triples."""
    return {
        "kind": "length_identity",
        "label": label,
        "terms": {k: {"small": s, "big": b, "length": v} for k, (s, b, v) in terms.items()},
        "relation": expected_relation,
    }


def replay_witness(witness):
    """Re-check a witness independently; True when the violation is confirmed."""
    kind = witness["kind"]
    if kind == "ideal_equality":
        arity = witness["arity"]
        left = MonomialIdeal(arity, witness["left"])
        right = MonomialIdeal(arity, witness["right"])
        u = tuple(witness["monomial"])
        return mc.member(u, left) != mc.member(u, right)
    if kind == "containment":
        arity = witness["arity"]
        big = MonomialIdeal(arity, witness["big"])
        small = MonomialIdeal(arity, witness["small"])
        u = tuple(witness["monomial"])
        return mc.member(u, small) and not mc.member(u, big)
    if kind == "length_identity":
        values = {}
        for name, term in witness["terms"].items():
            arity = len(term["small"][0]) if term["small"] else len(term["big"][0])
            small = MonomialIdeal(arity, term["small"])
            big = MonomialIdeal(arity, term["big"])
            values[name] = length_by_hilbert(small, big)
        lhs, plus, minus = witness["relation"]
        return values[lhs] != sum(values[p] for p in plus) - sum(values[m] for m in minus)
    raise ValueError(f"unknown witness kind {kind}")


def _equality_report(name, instance, pairs):
    """Pass when every (label, left, right) pair of ambient ideals is equal."""
    for label, left, right in pairs:
        if left != right:
            return CheckReport(name, instance, False, ideal_witness(label, left, right))
    return CheckReport(name, instance, True)


# -- ideal identities -------------------------------------------------------

def check_modular_law(I, J, K):
    """I ∩ (J + K) == (I ∩ J) + (I ∩ K) whenever J or K lies in I."""
    instance = f"I={I.format()} J={J.format()} K={K.format()}"
    if not (mc.contains(I, J) or mc.contains(I, K)):
        return CheckReport("modular_law", instance, True, skipped=True)
    left = mc.intersect(I, mc.add(J, K))
    right = mc.add(mc.intersect(I, J), mc.intersect(I, K))
    return _equality_report("modular_law", instance, [("I∩(J+K) vs (I∩J)+(I∩K)", left, right)])


def _saturate_by_colon(ideal):
    """Saturation inside the quotient ring by iterating the ring colon with m_R."""
    m = ideal.ring.maximal()
    current = ideal
    while True:
        nxt = r_colon(current, m)
        if nxt == current:
            return current
        current = nxt


def check_quotient_identities(J, G, n):
    """Quotient-ring saturation, power and intersection identities for S/G.

    (i)   sat(((J+G)/G)^n) computed in S/G equals sat(J^n + G)/G
    (ii)  ((J+G)/G)^n equals (J^n + G)/G
    (iii) with I = J^n + G and J' = J + G (both containing G),
          (I/G) ∩ (J'/G) equals (I ∩ J')/G
    """
    instance = f"J={J.format()} G={G.format()} n={n}"
    if G.is_unit():
        return CheckReport("quotient_identities", instance, True, skipped=True)
    ring = QuotientRing(G.arity, mc.default_names(G.arity), G)
    jg = ideal_in_ring(ring, J.gens)
    jn_g = mc.add(mc.power(J, n), G)
    quotient_power = r_power(jg, n)
    quotient_sat = _saturate_by_colon(quotient_power)
    ambient_sat = mc.saturate_by_vars(jn_g)
    big_i = RingIdeal(ring, jn_g)
    inter_q = r_intersect(big_i, jg)
    inter_a = mc.intersect(jn_g, mc.add(J, G))
    return _equality_report("quotient_identities", instance, [
        ("(i) saturation", quotient_sat.rep, ambient_sat),
        ("(ii) power", quotient_power.rep, jn_g),
        ("(iii) intersection", inter_q.rep, inter_a),
    ])


def check_graded_family(ring, ideal, bound, *, families=None):
    """J'_i J'_j ⊆ J'_(i+j) and I'_i I'_j ⊆ I'_(i+j) for i + j <= bound."""
    fam = families or IdealFamily(ideal)
    instance = f"R={ring.format()} I={ideal.format()} bound={bound}"
    fam.power(bound)
    seqs = {
        "J'": lambda n: fam.sat_of_power_plus_N(n) if n else ring.unit(),
        "I'": lambda n: fam.sat_power_plus_N(n) if n else ring.unit(),
    }
    for label, get in seqs.items():
        for i in range(bound + 1):
            for j in range(i, bound + 1 - i):
                prod = get(i) * get(j)
                target = get(i + j)
                if not prod <= target:
                    return CheckReport(
                        "graded_family", instance, False,
                        containment_witness(f"{label}_{i}*{label}_{j} in {label}_{i + j}",
                                            prod.rep, target.rep))
    return CheckReport("graded_family", instance, True)


# -- exact sequences --------------------------------------------------------

def _length_terms(fam, families, n=None, m=None, k=None):
    terms = {}
    for f in families:
        small, big = fam.pair(f, n=n, m=m, k=k)
        terms[f.value] = (_gens(small.rep), _gens(big.rep), length(small, big))
    return terms


def check_nil_additivity(ring, ideal, n, *, families=None):
    """length((I^n)^sat/I^n) == length(((I^n)^sat+N)/(I^n+N)) + length(((I^n)^sat∩N)/(I^n∩N))."""
    fam = families or IdealFamily(ideal)
    instance = f"R={ring.format()} I={ideal.format()} n={n}"
    terms = _length_terms(fam, (FamilyKind.EPSILON_CORE, FamilyKind.MODN_OUTER,
                                FamilyKind.NIL_PART), n=n)
    core, outer, nil = (terms[f][2] for f in ("EpsilonCore", "ModN_outer", "NilPart"))
    details = {"EpsilonCore": core, "ModN_outer": outer, "NilPart": nil}
    if core == outer + nil:
        return CheckReport("nil_additivity", instance, True, details=details)
    relation = ("EpsilonCore", ["ModN_outer", "NilPart"], [])
    return CheckReport("nil_additivity", instance, False,
                       length_witness("nilpart split", terms, relation), details=details)


def check_correction_additivity(ring, ideal, n, *, families=None):
    """(I^n)^sat + N ⊆ (I^n+N)^sat and ModN_outer == ModN_sat - Correction."""
    fam = families or IdealFamily(ideal)
    instance = f"R={ring.format()} I={ideal.format()} n={n}"
    inner, outer_sat = fam.sat_power_plus_N(n), fam.sat_of_power_plus_N(n)
    if not inner <= outer_sat:
        return CheckReport("correction_additivity", instance, False,
                           containment_witness("(I^n)^sat+N in (I^n+N)^sat", inner.rep, outer_sat.rep))
    terms = _length_terms(fam, (FamilyKind.MODN_OUTER, FamilyKind.MODN_SAT,
                                FamilyKind.CORRECTION), n=n)
    outer, msat, corr = (terms[f][2] for f in ("ModN_outer", "ModN_sat", "Correction"))
    details = {"ModN_outer": outer, "ModN_sat": msat, "Correction": corr}
    if outer == msat - corr:
        return CheckReport("correction_additivity", instance, True, details=details)
    relation = ("ModN_outer", ["ModN_sat"], ["Correction"])
    return CheckReport("correction_additivity", instance, False,
                       length_witness("correction split", terms, relation), details=details)


def _nil_amao_pair(fam, m, k):
    N = fam.N
    return r_intersect(fam.power(m * k), N), r_intersect(fam.sat_power_pow(m, k), N)


def check_filtration_consistency(ring, ideal, m, kmax, *, tolerance=DEFAULT_TOLERANCE, families=None):
    """Amao inner lengths split exactly as nil part + reduction, and the limits match.

    Per k: length([(I^m)^sat]^k / I^(mk))
         = length(([(I^m)^sat]^k ∩ N) / (I^(mk) ∩ N))
         + length(([(I^m)^sat]^k + N) / (I^(mk) + N)).
    The reduction's normalized limit is then compared with the Amao estimate.
    """
    fam = families or IdealFamily(ideal)
    d = ring.dim_ring
    instance = f"R={ring.format()} I={ideal.format()} m={m} kmax={kmax}"
    fam.power(m * kmax)
    inner, filt = [], []
    for k in range(1, kmax + 1):
        a = family_record(fam, FamilyKind.AMAO_INNER, m=m, k=k)
        f = family_record(fam, FamilyKind.FILT_I, m=m, k=k)
        small, big = _nil_amao_pair(fam, m, k)
        z = length(small, big)
        if a.length != f.length + z:
            terms = _length_terms(fam, (FamilyKind.AMAO_INNER, FamilyKind.FILT_I), m=m, k=k)
            terms["NilAmao"] = (_gens(small.rep), _gens(big.rep), z)
            return CheckReport("filtration_consistency", instance, False, length_witness(
                f"k={k}", terms, ("AmaoInner", ["FiltI", "NilAmao"], [])))
        inner.append(a)
        filt.append(f)
    if kmax < d + 2:
        return CheckReport("filtration_consistency", instance, True, skipped=True,
                           details={"reason": "kmax too small for a limit estimate"})
    amao = estimate_limit(inner, d, tolerance).finite_diff
    reduced = estimate_limit(filt, d, tolerance).finite_diff
    gap = relative_gap(amao, reduced)
    details = {"amao": amao, "reduced": reduced, "amao_over_dfact": amao / factorial(d),
               "reduced_raw": reduced / factorial(d), "gap": gap}
    if gap <= tolerance:
        return CheckReport("filtration_consistency", instance, True, details=details)
    return CheckReport("filtration_consistency", instance, False, {
        "kind": "estimate_gap", "amao": str(amao), "reduced": str(reduced),
        "tolerance": str(tolerance)}, details=details)


# -- the main limit statement ----------------------------------------------

def check_volume_multiplicity(ring, ideal, mmax, nmax, *, kmax=6, tolerance=DEFAULT_TOLERANCE,
                     families=None):
    """Compare the epsilon estimate with a(I^m, (I^m)^sat) / m^d at the largest m.

    Raises HypothesisViolation when dim N == dim R.
    """
    if not ring.hypothesis_holds:
        raise HypothesisViolation(
            f"dim N = {ring.dim_nilradical} is not less than dim R = {ring.dim_ring}")
    fam = families or IdealFamily(ideal)
    d = ring.dim_ring
    instance = f"R={ring.format()} I={ideal.format()} mmax={mmax} nmax={nmax} kmax={kmax}"
    eps = estimate_limit(epsilon_sequence(ring, ideal, nmax, families=fam), d, tolerance)
    grid = amao_grid(ring, ideal, mmax, kmax, families=fam, tolerance=tolerance)
    outer = grid.outer()
    last = outer[-1][2]
    gap = relative_gap(eps.finite_diff, last)
    details = {"epsilon": eps, "outer": outer, "gap": gap}
    if gap <= tolerance:
        return CheckReport("volume_multiplicity", instance, True, details=details)
    return CheckReport("volume_multiplicity", instance, False, {
        "kind": "estimate_gap", "epsilon": str(eps.finite_diff), "amao_ratio": str(last),
        "tolerance": str(tolerance)}, details=details)


# -- oracle agreement -------------------------------------------------------

def check_saturation_oracle(ideal):
    """The iterated-colon saturation agrees with the variable-wise one."""
    sat, _ = mc.saturate_max(ideal)
    return _equality_report("saturation_oracle", ideal.format(),
                            [("colon fixpoint vs variable-wise", sat, mc.saturate_by_vars(ideal))])


def check_length_oracle(small, big):
    """Level counting agrees with Hilbert-function summation for small ⊆ big."""
    instance = f"{big.format()} / {small.format()}"
    direct = length_quotient(small, big).value
    oracle = length_by_hilbert(small, big)
    if direct == oracle:
        return CheckReport("length_oracle", instance, True, details={"length": direct})
    return CheckReport("length_oracle", instance, False, {
        "kind": "length_identity", "label": "level count vs Hilbert sum",
        "terms": {"direct": {"small": _gens(small), "big": _gens(big), "length": direct}},
        "relation": ("direct", [], []), "oracle": oracle})


# -- random instances -------------------------------------------------------

@dataclass
class InstanceGen:
    """Deterministic source of random monomial ideals and quotient rings."""

    seed: int
    arity: int = 3
    max_degree: int = 5
    max_gens: int = 5
    nilpotent_quotient: bool = False

    def __post_init__(self):
        if not 1 <= self.arity <= 4:
            raise ValueError("arity must be between 1 and 4")
        if not 1 <= self.max_degree <= 5 or not 1 <= self.max_gens <= 5:
            raise ValueError("max_degree and max_gens must be between 1 and 5")
        self.rng = random.Random(self.seed)

    def monomial(self, arity=None, min_degree=1):
        arity = arity or self.arity
        deg = self.rng.randint(min_degree, self.max_degree)
        u = [0] * arity
        for _ in range(deg):
            u[self.rng.randrange(arity)] += 1
        return tuple(u)

    def ideal(self, arity=None, allow_zero=False):
        arity = arity or self.arity
        if allow_zero and self.rng.random() < 0.05:
            return MonomialIdeal.zero(arity)
        count = self.rng.randint(1, self.max_gens)
        gens = [self.monomial(arity) for _ in range(count)]
        # keep x_1 in the first generator so saturations are rarely trivial
        first = list(gens[0])
        if first[0] == 0:
            donor = max(range(arity), key=first.__getitem__)
            first[donor] -= 1
            first[0] = 1
        gens[0] = tuple(first)
        return MonomialIdeal(arity, gens)

    def contained_pair(self, arity=None):
        """(I, J) with J ⊆ I."""
        big = self.ideal(arity)
        return big, mc.intersect(big, self.ideal(arity))

    def modular_triple(self):
        I, J = self.contained_pair()
        K = self.ideal(allow_zero=True)
        if self.rng.random() < 0.5:
            J, K = K, J
        return I, J, K

    def quotient(self, arity=None):
        """A proper Q; with ``nilpotent_quotient``, non-radical with dim N < dim R."""
        arity = arity or self.arity
        for _ in range(1000):
            count = self.rng.randint(1, min(3, self.max_gens))
            gens = [self.monomial(arity, min_degree=2) for _ in range(count)]
            Q = MonomialIdeal(arity, gens)
            if not self.nilpotent_quotient:
                return Q
            ring = QuotientRing(arity, mc.default_names(arity), Q)
            if not ring.is_reduced and ring.hypothesis_holds:
                return Q
        raise RuntimeError("no admissible quotient found")

    def ring(self, arity=None):
        arity = arity or self.arity
        return make_ring(arity, Q=self.quotient(arity))

    def ring_ideal(self, ring):
        return ideal_in_ring(ring, self.ideal(ring.arity).gens)


# -- suite ------------------------------------------------------------------

def _graded_instances(seed, count):
    gen = InstanceGen(seed, arity=3, max_degree=3, max_gens=3, nilpotent_quotient=True)
    out = []
    for _ in range(count):
        ring = gen.ring()
        out.append((ring, gen.ring_ideal(ring)))
    return out


def run_property_suite(seed, *, modular=200, quotient=100, graded=20, graded_bound=6):
    """Seeded randomized runs of the modular law, quotient-ring identities and graded families."""
    reports = []
    gen = InstanceGen(seed)
    for _ in range(modular):
        reports.append(check_modular_law(*gen.modular_triple()))
    gen = InstanceGen(seed + 1)
    for _ in range(quotient):
        J = gen.ideal()
        G = gen.quotient()
        n = gen.rng.randint(1, 4)
        reports.append(check_quotient_identities(J, G, n))
    for ring, ideal in _graded_instances(seed + 2, graded):
        reports.append(check_graded_family(ring, ideal, graded_bound))
    return reports


def run_oracle_suite(seed, count=500):
    """Saturation and length oracle agreement on ``count`` random ideals (arity <= 3)."""
    reports = []
    gen = InstanceGen(seed)
    for _ in range(count):
        arity = gen.rng.randint(1, 3)
        I = gen.ideal(arity)
        reports.append(check_saturation_oracle(I))
        reports.append(check_length_oracle(I, mc.saturate(I)))
    return reports


def run_instance_checks(ring, ideal, *, nmax=8, mmax=3, kmax=6, tolerance=DEFAULT_TOLERANCE):
    """All exact and limit checks for one ring/ideal pair."""
    fam = IdealFamily(ideal)
    reports = []
    for n in range(1, nmax + 1):
        reports.append(check_nil_additivity(ring, ideal, n, families=fam))
        reports.append(check_correction_additivity(ring, ideal, n, families=fam))
    reports.append(check_graded_family(ring, ideal, min(nmax, 8), families=fam))
    for m in range(1, mmax + 1):
        reports.append(check_filtration_consistency(ring, ideal, m, kmax, tolerance=tolerance,
                                              families=fam))
    if ring.hypothesis_holds:
        reports.append(check_volume_multiplicity(ring, ideal, mmax, nmax, kmax=kmax,
                                        tolerance=tolerance, families=fam))
    return reports


def run_suite(seed, ring=None, ideal=None, **params):
    reports = run_property_suite(seed)
    if ring is not None and ideal is not None:
        reports.extend(run_instance_checks(ring, ideal, **params))
    return reports
