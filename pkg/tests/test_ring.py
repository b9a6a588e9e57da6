import pytest
from hypothesis import given, settings, strategies as st

from epslab import monomial as mc
from epslab.errors import ArityMismatch, RingMismatch, UnitIdealError
from epslab.monomial import MonomialIdeal
from epslab.ring import (
    RingIdeal,
    ideal_in_ring,
    image_mod_N,
    make_ring,
    nilradical,
    r_add,
    r_intersect,
    r_power,
    r_saturate,
)

from oracles import ideal_set, saturation_set
from strategies import ideal, ideals


def test_nilpotent_ring_data(nilpotent_ring):
    R = nilpotent_ring
    assert R.dim_ring == 2
    assert R.nilrad_ambient == ideal(3, (0, 0, 1))
    assert R.ann_N == ideal(3, (0, 1, 0), (0, 0, 1))
    assert R.dim_nilradical == 1
    assert R.hypothesis_holds and not R.is_reduced


def test_reduced_ring_data():
    R = make_ring(2, "xy", [(1, 1)])
    assert R.is_reduced
    assert R.dim_nilradical == -1
    assert R.hypothesis_holds
    assert nilradical(R).is_zero()


def test_double_line_fails_hypothesis():
    R = make_ring(2, "xy", [(0, 2)])
    assert R.nilrad_ambient == ideal(2, (0, 1))
    assert R.ann_N == ideal(2, (0, 1))
    assert R.dim_nilradical == 1 == R.dim_ring
    assert not R.hypothesis_holds


def test_make_ring_errors():
    with pytest.raises(UnitIdealError):
        make_ring(2, "xy", [(0, 0)])
    with pytest.raises(ArityMismatch):
        make_ring(2, "xyz")
    with pytest.raises(ValueError):
        make_ring(2, "xx")


def test_ideal_in_ring_examples(nilpotent_ring):
    R = nilpotent_ring
    I = ideal_in_ring(R, [(2, 0, 0), (1, 1, 0)])
    assert I.rep == ideal(3, (2, 0, 0), (1, 1, 0), (0, 0, 2), (0, 1, 1))
    assert ideal_in_ring(R, []).rep == R.Q
    assert ideal_in_ring(R, []).is_zero()
    assert ideal_in_ring(R, [(0, 0, 0)]).is_unit()
    with pytest.raises(ArityMismatch):
        ideal_in_ring(R, [(1, 0)])


def test_rep_always_contains_Q(nilpotent_ring):
    I = RingIdeal(nilpotent_ring, ideal(3, (1, 0, 0)))
    assert mc.contains(I.rep, nilpotent_ring.Q)


def test_r_saturate_contains_xz(nilpotent_ring):
    R = nilpotent_ring
    I = ideal_in_ring(R, [(2, 0, 0), (1, 1, 0)])
    sat = r_saturate(I)
    assert (1, 0, 1) in sat.rep
    # brute-force: x*z*m lands in rep(I)
    assert ideal_set(sat.rep.gens, 3, 4) == saturation_set(I.rep.gens, 3, 4)


def test_r_power_one_is_identity(nilpotent_ring):
    I = ideal_in_ring(nilpotent_ring, [(2, 0, 0), (1, 1, 0)])
    assert r_power(I, 1) == I
    assert r_power(I, 0).is_unit()


def test_reduced_ring_saturation_is_ambient():
    R = make_ring(2, "xy", [(1, 1)])
    I = ideal_in_ring(R, [(3, 0)])
    assert r_saturate(I).rep == mc.saturate(I.rep)


def test_ring_mismatch(nilpotent_ring, plane):
    with pytest.raises(RingMismatch):
        r_add(plane.unit(), nilpotent_ring.unit())


def test_nilradical_and_image(nilpotent_ring, plane):
    R = nilpotent_ring
    N = nilradical(R)
    assert N.rep == ideal(3, (0, 0, 1))
    assert image_mod_N(N).is_zero()
    assert image_mod_N(N).ring.Q == R.nilrad_ambient
    I = ideal_in_ring(R, [(2, 0, 0)])
    assert image_mod_N(I).rep == ideal(3, (2, 0, 0), (0, 0, 1))
    J = ideal_in_ring(plane, [(1, 1)])
    assert image_mod_N(J) == J


def test_reduction_keeps_dimension(nilpotent_ring):
    assert nilpotent_ring.reduction().dim_ring == nilpotent_ring.dim_ring


def test_format(nilpotent_ring):
    assert nilpotent_ring.format() == "k[x,y,z]/(y*z, z^2)"
    assert ideal_in_ring(nilpotent_ring, [(2, 0, 0), (0, 1, 1)]).format() == "(x^2)"


# -- properties ---------------------------------------------------------------

proper = ideals(arity=3, max_exponent=2, max_gens=3).filter(lambda G: not G.is_unit())


@given(ideals(arity=3, max_exponent=2, max_gens=3), proper, st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_quotient_saturation_and_power(J, G, n):
    R = make_ring(3, Q=G)
    jg = ideal_in_ring(R, J.gens)
    jn_g = mc.add(mc.power(J, n), G)
    assert r_power(jg, n).rep == jn_g
    assert r_saturate(r_power(jg, n)).rep == mc.saturate(jn_g)


@given(ideals(arity=3, max_exponent=2), ideals(arity=3, max_exponent=2), proper)
@settings(max_examples=60)
def test_intersection_commutes_with_adding_G(I, J, G):
    I, J = I + G, J + G
    R = make_ring(3, Q=G)
    assert r_intersect(RingIdeal(R, I), RingIdeal(R, J)).rep == mc.intersect(I, J)


@given(proper)
def test_reduction_dimension(Q):
    assert mc.dimension(mc.radical(Q)) == mc.dimension(Q)
    R = make_ring(3, Q=Q)
    assert R.dim_nilradical <= R.dim_ring
    assert R.is_reduced == (R.nilrad_ambient == Q)
    assert mc.contains(R.nilrad_ambient, Q)


@given(proper, ideals(arity=3, max_exponent=2), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_saturation_properties_in_ring(Q, gens, n):
    R = make_ring(3, Q=Q)
    I = ideal_in_ring(R, gens.gens)
    sat = r_saturate(I)
    assert I <= sat and r_saturate(sat) == sat
    N = nilradical(R)
    In = r_power(I, n)
    assert r_add(r_saturate(In), N) <= r_saturate(r_add(In, N))
