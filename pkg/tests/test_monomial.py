import pytest
from hypothesis import given, settings, strategies as st

from epslab import monomial as mc
from epslab.errors import ArityMismatch, UnitIdealError
from epslab.monomial import Monomial, MonomialIdeal

from oracles import colon_set, ideal_set, krull_dim_brute, saturation_set
from strategies import ideal, ideals

X, Y = (1, 0), (0, 1)
X2, XY, Y2 = (2, 0), (1, 1), (0, 2)


# -- construction and canonical form ---------------------------------------

def test_minimalize_drops_multiples():
    assert mc.minimalize([(2, 0), (3, 0), (1, 1)]).gens == (X2, XY)


def test_minimalize_empty_is_zero():
    z = mc.minimalize([], arity=2)
    assert z.is_zero() and z == MonomialIdeal.zero(2)


def test_minimalize_unit_absorbs():
    assert mc.minimalize([(0, 0), (1, 0)]).is_unit()


def test_minimalize_arity_mismatch():
    with pytest.raises(ArityMismatch):
        MonomialIdeal(2, [(1, 0), (1, 0, 0)])


def test_canonical_order_is_graded_lex():
    I = ideal(2, Y2, (0, 3), X, XY)
    assert I.gens == (X, Y2)
    J = ideal(3, (0, 0, 2), (0, 1, 1), (2, 0, 0), (1, 1, 0))
    assert J.gens == ((2, 0, 0), (1, 1, 0), (0, 1, 1), (0, 0, 2))


def test_monomial_type():
    u = Monomial((2, 1))
    assert u.degree == 3 and u.arity == 2
    assert Monomial.one(3) == (0, 0, 0)
    assert u * Monomial((0, 1)) == (2, 2)
    with pytest.raises(ValueError):
        Monomial((-1, 0))
    with pytest.raises(OverflowError):
        Monomial((2**31, 0))


def test_exponent_bound_is_enforced():
    big = mc.MAX_EXPONENT
    I = ideal(2, (big, 0))
    with pytest.raises(OverflowError):
        mc.multiply(I, ideal(2, (1, 0)))
    with pytest.raises(OverflowError):
        ideal(2, (big + 1, 0))
    assert mc.power(ideal(2, (big // 2, 0)), 2).gens == ((big - 1, 0),)


def test_format():
    assert ideal(2, X2, XY).format() == "(x^2, x*y)"
    assert MonomialIdeal.zero(2).format() == "(0)"
    assert MonomialIdeal.unit(2).format() == "(1)"


# -- arithmetic examples ----------------------------------------------------

def test_add_examples():
    assert mc.add(ideal(2, X2), ideal(2, XY)) == ideal(2, X2, XY)
    I = ideal(2, X2, XY)
    assert mc.add(I, MonomialIdeal.zero(2)) == I
    assert mc.add(ideal(2, X), ideal(2, Y)) == MonomialIdeal.maximal(2)


def test_power_examples():
    m = MonomialIdeal.maximal(2)
    assert mc.power(m, 2) == ideal(2, X2, XY, Y2)
    assert mc.power(ideal(2, X2, XY), 0).is_unit()
    # generator products of (x^2, xy)^2: x^4, x^3y, x^2y^2
    assert mc.power(ideal(2, X2, XY), 2).gens == ((4, 0), (3, 1), (2, 2))


def test_intersect_examples():
    assert mc.intersect(ideal(2, X), ideal(2, Y)) == ideal(2, XY)
    I = ideal(2, X2, XY)
    assert mc.intersect(I, I) == I
    got = mc.intersect(ideal(2, X2, Y), ideal(2, X))
    assert got == ideal(2, X2, XY)
    assert ideal_set(got.gens, 2, 3) == ideal_set([X2, Y], 2, 3) & ideal_set([X], 2, 3)


def test_colon_examples():
    got = mc.colon(ideal(2, X2, XY), ideal(2, X))
    assert got == ideal(2, X, Y)
    assert ideal_set(got.gens, 2, 3) == colon_set([X2, XY], [X], 2, 3)
    I = ideal(2, X2, XY)
    assert mc.colon(I, MonomialIdeal.unit(2)) == I
    got = mc.colon(ideal(2, X), ideal(2, Y))
    assert got == ideal(2, X)
    assert ideal_set(got.gens, 2, 3) == colon_set([X], [Y], 2, 3)


def test_colon_by_zero_is_unit():
    assert mc.colon(ideal(2, X), MonomialIdeal.zero(2)).is_unit()


def test_saturate_var_examples():
    I = ideal(2, X2, XY)
    assert mc.saturate_var(I, 0).is_unit()
    assert mc.saturate_var(I, 1) == ideal(2, X)
    assert mc.saturate_var(ideal(2, XY), 0) == ideal(2, Y)
    with pytest.raises(IndexError):
        mc.saturate_var(I, 2)


def test_saturate_max_examples():
    I = ideal(2, X2, XY)
    assert mc.saturate_max(I) == (ideal(2, X), 1)
    assert mc.saturate_by_vars(I) == ideal(2, X)
    sat, t = mc.saturate_max(mc.power(MonomialIdeal.maximal(2), 2))
    assert sat.is_unit() and t >= 1
    assert mc.saturate_max(ideal(2, XY)) == (ideal(2, XY), 0)
    assert mc.saturate_by_vars(ideal(2, XY)) == ideal(2, XY)


def test_saturate_matches_brute_force():
    I = ideal(2, X2, XY)
    assert ideal_set(mc.saturate(I).gens, 2, 4) == saturation_set(I.gens, 2, 4)


def test_radical_examples():
    assert mc.radical(ideal(3, (0, 0, 2), (0, 1, 1))) == ideal(3, (0, 0, 1))
    assert mc.radical(ideal(2, X)) == ideal(2, X)
    assert mc.radical(ideal(2, (2, 3))) == ideal(2, XY)


def test_dimension_examples():
    assert mc.dimension(ideal(3, (0, 0, 2), (0, 1, 1))) == 2
    assert mc.dimension(MonomialIdeal.zero(4)) == 4
    assert mc.dimension(MonomialIdeal.maximal(2)) == 0
    with pytest.raises(UnitIdealError):
        mc.dimension(MonomialIdeal.unit(2))


def test_dimension_arity_limit():
    with pytest.raises(ValueError):
        mc.dimension(MonomialIdeal.zero(13))


def test_membership_examples():
    I = ideal(2, X2, XY)
    assert (2, 1) in I
    assert mc.contains(ideal(2, X), I)
    assert not mc.contains(I, ideal(2, X))
    assert I <= ideal(2, X) and not ideal(2, X) <= I
    with pytest.raises(ArityMismatch):
        mc.member((1, 0, 0), I)


# -- properties ---------------------------------------------------------------

@given(ideals(), ideals())
def test_operations_return_canonical_forms(I, J):
    for K in (I + J, I * J, I & J, mc.colon(I, J), mc.saturate(I), mc.radical(I)):
        assert MonomialIdeal(K.arity, K.gens) == K
        assert mc.minimalize(K.gens, K.arity).gens == K.gens


@given(ideals(), ideals())
def test_product_inside_intersection_and_colon_laws(I, J):
    assert mc.contains(I & J, I * J)
    C = mc.colon(I, J)
    assert mc.contains(I, mc.multiply(C, J))
    assert mc.contains(C, I)


@given(ideals(), ideals())
@settings(max_examples=60)
def test_intersect_and_colon_match_enumeration(I, J):
    deg = 7
    assert ideal_set((I & J).gens, 2, deg) == ideal_set(I.gens, 2, deg) & ideal_set(J.gens, 2, deg)
    assert ideal_set(mc.colon(I, J).gens, 2, deg) == colon_set(I.gens, J.gens, 2, deg)


@given(ideals(arity=3, max_exponent=2))
@settings(max_examples=40)
def test_saturation_matches_enumeration(I):
    assert ideal_set(mc.saturate(I).gens, 3, 5) == saturation_set(I.gens, 3, 5, t_max=8)


@given(ideals(arity=3), ideals(arity=3))
def test_saturation_laws(I, J):
    s, t = mc.saturate_max(I)
    assert s == mc.saturate_by_vars(I)
    assert mc.contains(s, I)
    assert mc.saturate(s) == s
    assert mc.colon(I, mc.power(MonomialIdeal.maximal(3), t)) == s
    assert mc.saturate(I & J) == mc.saturate(I) & mc.saturate(J)


@given(ideals(arity=3), ideals(arity=3), ideals(arity=3))
def test_modular_law(I, J, K):
    J = I & J  # J inside I
    assert mc.intersect(I, J + K) == (I & J) + (I & K)


@given(ideals(max_gens=3), st.integers(0, 3), st.integers(0, 3))
def test_power_additivity(I, a, b):
    assert mc.power(I, a + b) == mc.power(I, a) * mc.power(I, b)


@given(ideals(arity=3), ideals(arity=3), ideals(arity=3))
def test_monotonicity(I, J, K):
    J = I & J
    assert mc.contains(mc.colon(I, K), mc.colon(J, K))
    assert mc.contains(mc.saturate(I), mc.saturate(J))


@given(ideals(arity=3, allow_zero=True))
def test_dimension_matches_coordinate_subspaces(I):
    if I.is_unit():
        return
    assert mc.dimension(I) == krull_dim_brute(I.gens, 3)
    assert mc.dimension(mc.radical(I)) == mc.dimension(I)


@given(ideals(), ideals())
def test_equality_is_representation_identity(I, J):
    same = mc.contains(I, J) and mc.contains(J, I)
    assert same == (I.gens == J.gens) == mc.equals(I, J)
