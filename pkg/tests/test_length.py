from math import comb

import pytest
from hypothesis import given, settings

from epslab import monomial as mc
from epslab.errors import ContainmentError, InfiniteLength
from epslab.length import (
    StopCertificate,
    hilbert_function,
    is_finite_colength_pair,
    length_by_hilbert,
    length_quotient,
)
from epslab.monomial import MonomialIdeal
from epslab.ring import ideal_in_ring, r_power, r_saturate

from oracles import count_between, gens_power, monomials_upto
from strategies import ideal, ideals


def test_finiteness_examples(plane):
    B = ideal_in_ring(plane, [(2, 0), (1, 1)])
    assert is_finite_colength_pair(B, ideal_in_ring(plane, [(1, 0)]))
    assert not is_finite_colength_pair(ideal_in_ring(plane, [(2, 0)]), ideal_in_ring(plane, [(1, 0)]))
    assert is_finite_colength_pair(B, B)


def test_finiteness_requires_containment(plane):
    with pytest.raises(ContainmentError):
        is_finite_colength_pair(ideal_in_ring(plane, [(1, 0)]), ideal_in_ring(plane, [(2, 0)]))


def test_length_examples(plane):
    B = ideal_in_ring(plane, [(2, 0), (1, 1)])
    A = ideal_in_ring(plane, [(1, 0)])
    res = length_quotient(B, A)
    assert res.value == 1 == count_between(B.rep.gens, A.rep.gens, 2, 6)
    assert res.stop_certificate is StopCertificate.LEVEL_EMPTY_PAST_MAX_GEN_DEGREE
    assert res.degree_cutoff >= A.rep.max_degree()

    assert length_quotient(A, A).value == 0
    assert length_quotient(A, A).stop_certificate is StopCertificate.EQUAL_IDEALS
    assert length_quotient(plane.unit(), plane.unit()).stop_certificate is StopCertificate.BOTH_UNIT

    # x^2 * (x, y)^2 inside (x^2): basis x^2, x^3, x^2*y
    big = ideal_in_ring(plane, [(2, 0)])
    small = ideal_in_ring(plane, [(4, 0), (3, 1), (2, 2)])
    assert length_quotient(small, big).value == 3 == count_between(small.rep.gens, big.rep.gens, 2, 8)


def test_length_errors(plane):
    with pytest.raises(InfiniteLength):
        length_quotient(ideal_in_ring(plane, [(2, 0)]), ideal_in_ring(plane, [(1, 0)]))
    with pytest.raises(ContainmentError):
        length_quotient(ideal_in_ring(plane, [(1, 0)]), ideal_in_ring(plane, [(2, 0)]))


@pytest.mark.parametrize("n", range(1, 9))
def test_colength_of_maximal_powers(plane, n):
    mn = r_power(plane.maximal(), n)
    assert length_quotient(mn, plane.unit()).value == n * (n + 1) // 2


def test_hilbert_function_examples():
    I = ideal(2, (2, 0), (1, 1))
    assert hilbert_function(I, 2) == 1
    assert [hilbert_function(MonomialIdeal.zero(3), e) for e in range(5)] == [comb(e + 2, 2) for e in range(5)]
    assert hilbert_function(MonomialIdeal.unit(2), 3) == 0


def test_hilbert_function_counts_level():
    I = ideal(3, (1, 1, 0), (0, 0, 2))
    for e in range(6):
        level = [u for u in monomials_upto(3, e) if sum(u) == e]
        assert hilbert_function(I, e) == sum(1 for u in level if not mc.member(u, I))


def test_length_in_quotient_ring(nilpotent_ring):
    R = nilpotent_ring
    I = ideal_in_ring(R, [(2, 0, 0), (1, 1, 0)])
    for n in range(1, 5):
        In = r_power(I, n)
        sat = mc.saturate(In.rep)
        gens = gens_power(I.rep.gens, n, 3) + list(R.Q.gens)
        expect = count_between(gens, sat.gens, 3, 3 * n + 2)
        assert length_quotient(In, r_saturate(In)).value == expect


# -- properties ---------------------------------------------------------------

@given(ideals(arity=3, max_exponent=3, max_gens=4))
@settings(max_examples=80, deadline=None)
def test_saturation_quotient_is_finite_and_oracles_agree(I):
    sat = mc.saturate(I)
    assert is_finite_colength_pair(I, sat)
    direct = length_quotient(I, sat).value
    assert direct == length_by_hilbert(I, sat)
    assert (direct == 0) == (I == sat)
    bound = sat.max_degree() + mc.saturate_max(I)[1] + 1
    assert direct == count_between(I.gens, sat.gens, 3, bound)


@given(ideals(arity=2, max_exponent=4), ideals(arity=2, max_exponent=4))
@settings(max_examples=80, deadline=None)
def test_additivity(I, J):
    # I ⊆ I + (J ∩ sat(I)) ⊆ sat(I), all quotients of finite length
    sat = mc.saturate(I)
    mid = I + (J & sat)
    total = length_quotient(I, sat).value
    assert total == length_quotient(I, mid).value + length_quotient(mid, sat).value


def test_default_hilbert_cutoff_is_independent():
    I = ideal(2, (3, 0), (2, 2), (0, 4))
    sat = mc.saturate(I)
    assert length_by_hilbert(I, sat) == length_by_hilbert(I, sat, cutoff=20)
