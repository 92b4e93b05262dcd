import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewgrowth.dirichlet import KeyKind, Series, growth_series, series_invert, series_mul
from skewgrowth.errors import InvalidParamsError, MalformedDyadicError
from skewgrowth.models import RewriteModel
from skewgrowth.mp_family import (
    MpElement,
    MpModel,
    MpSpec,
    degree_membership,
    element_degree,
    element_of_degree,
    family_presentation,
    generator_degree,
    mp_left_divides,
    mp_min_common_multiples,
    mp_product,
    normal_form,
)
from skewgrowth.presets import builtin
from skewgrowth.towers import enumerate_towers, skew_growth

SPEC = MpSpec((4, 8, 16))
F = Fraction


def test_spec_validation():
    with pytest.raises(InvalidParamsError):
        MpSpec(())
    with pytest.raises(InvalidParamsError):
        MpSpec((3,))  # p_1 must be even
    with pytest.raises(InvalidParamsError):
        MpSpec((0,))  # and positive
    with pytest.raises(InvalidParamsError):
        MpSpec((4, -1))
    MpSpec((2, 0, 7))  # later entries may be any nonnegative integer


def test_generator_degrees():
    assert [generator_degree(SPEC, k) for k in range(4)] == [
        F(1), F(5, 2), F(21, 4), F(85, 8)]
    with pytest.raises(IndexError):
        generator_degree(SPEC, 4)


def test_pow2_sequence_degrees():
    # the pow2 closed form p_k = 2^(k+1) reproduces the flagship parameters
    model = builtin("mp", p="pow2", K=3)
    assert model.spec.p == (4, 8, 16)
    assert model.spec.degrees == (F(1), F(5, 2), F(21, 4), F(85, 8))


def test_normal_forms():
    assert normal_form(SPEC, [1, 1]) == MpElement(5, (0, 0, 0))
    assert normal_form(SPEC, [2, 2, 1]) == MpElement(13, (0, 0, 0))
    assert normal_form(SPEC, [3, 1, 0, 2]) == MpElement(1, (1, 1, 1))
    assert normal_form(SPEC, []) == MpElement(0, (0, 0, 0))
    with pytest.raises(IndexError):
        normal_form(SPEC, [4])


def test_product_is_commutative_and_degree_additive():
    u = normal_form(SPEC, [1, 2])
    v = normal_form(SPEC, [2, 0, 0])
    uv = mp_product(SPEC, u, v)
    assert uv == mp_product(SPEC, v, u)
    assert element_degree(SPEC, uv) == element_degree(SPEC, u) + element_degree(SPEC, v)


def test_degree_membership_cases():
    assert degree_membership(SPEC, 0)
    assert degree_membership(SPEC, F(5, 2))
    assert degree_membership(SPEC, F(7, 2))   # a0 a1
    assert not degree_membership(SPEC, F(3, 2))
    assert not degree_membership(SPEC, F(1, 4))
    assert not degree_membership(SPEC, F(1, 8))
    assert not degree_membership(SPEC, -1)


def test_degree_membership_malformed():
    with pytest.raises(MalformedDyadicError):
        degree_membership(SPEC, F(1, 3))
    with pytest.raises(MalformedDyadicError):
        degree_membership(SPEC, F(1, 16))  # deeper than K = 3
    with pytest.raises(MalformedDyadicError):
        degree_membership(SPEC, 0.5)


@settings(deadline=None)
@given(st.integers(0, 40), st.tuples(*[st.integers(0, 1)] * 3))
def test_degree_roundtrip(n, eps):
    element = MpElement(n, eps)
    degree = element_degree(SPEC, element)
    assert degree_membership(SPEC, degree)
    assert element_of_degree(SPEC, degree) == element


@settings(deadline=None)
@given(st.tuples(st.integers(0, 20), *[st.integers(0, 1)] * 3),
       st.tuples(st.integers(0, 20), *[st.integers(0, 1)] * 3))
def test_degree_map_is_injective(raw_u, raw_v):
    u = MpElement(raw_u[0], raw_u[1:])
    v = MpElement(raw_v[0], raw_v[1:])
    if u != v:
        assert element_degree(SPEC, u) != element_degree(SPEC, v)


@settings(deadline=None)
@given(st.tuples(st.integers(0, 12), *[st.integers(0, 1)] * 3),
       st.tuples(st.integers(0, 12), *[st.integers(0, 1)] * 3))
def test_left_divides_matches_witness(raw_u, raw_v):
    u = MpElement(raw_u[0], raw_u[1:])
    v = MpElement(raw_v[0], raw_v[1:])
    # commutative monoid: u | v iff some w has u*w == v; search brute force
    witness = False
    for n in range(25):
        for e1 in (0, 1):
            for e2 in (0, 1):
                for e3 in (0, 1):
                    if mp_product(SPEC, u, MpElement(n, (e1, e2, e3))) == v:
                        witness = True
    assert mp_left_divides(SPEC, u, v) == witness


# --------------------------------------------------------------------- mcm

A0 = MpElement(0, (0, 0, 0))
GEN = {k: normal_form(SPEC, [k]) for k in range(4)}


def _mcm_degrees(members, cutoff=None):
    found = mp_min_common_multiples(SPEC, members, cutoff=cutoff)
    return [element_degree(SPEC, e) for e in found]


def test_mcm_of_a0_a1():
    assert _mcm_degrees([GEN[0], GEN[1]]) == [F(7, 2), F(5)]
    assert _mcm_degrees([GEN[0], GEN[1]], cutoff=4) == [F(7, 2)]


def test_mcm_of_a1_a2():
    assert _mcm_degrees([GEN[1], GEN[2]]) == [F(31, 4), F(21, 2)]
    assert _mcm_degrees([GEN[1], GEN[2]], cutoff=8) == [F(31, 4)]


def test_mcm_singleton_and_unit():
    assert mp_min_common_multiples(SPEC, [GEN[1]]) == [GEN[1]]
    unit = normal_form(SPEC, [])
    assert mp_min_common_multiples(SPEC, [unit, GEN[2]]) == [GEN[2]]


def test_mcm_agrees_with_poset_route(mp_table):
    poset = mp_table.poset()
    atoms = mp_table.atoms()
    for i in range(len(atoms)):
        for j in range(i, len(atoms)):
            members = [mp_table.element(atoms[i]), mp_table.element(atoms[j])]
            intrinsic = mp_min_common_multiples(
                SPEC, members, cutoff=mp_table.cutoff)
            via_poset = poset.min_common_multiples([atoms[i], atoms[j]])
            assert [mp_table.element_id(e) for e in intrinsic] == via_poset


def test_forest_tops_match_intrinsic_mcm(mp_table):
    forest = enumerate_towers(mp_table)
    for tower in forest.towers:
        for stage, top in zip(tower.stages, tower.tops):
            members = [mp_table.element(e) for e in stage]
            intrinsic = mp_min_common_multiples(SPEC, members, cutoff=mp_table.cutoff)
            assert [mp_table.element_id(e) for e in intrinsic] == list(top)


# ------------------------------------------------------------------- table

def test_table_atoms_and_labels(mp_table):
    assert [mp_table.label(a) for a in mp_table.atoms()] == ["a0", "a1", "a2"]
    assert mp_table.label(0) == "1"
    five = mp_table.element_id(MpElement(5, (0, 0, 0)))
    assert mp_table.label(five) == "a0^5"
    mixed = mp_table.element_id(MpElement(2, (1, 0, 0)))
    assert mp_table.label(mixed) == "a0^2 a1"
    pair = mp_table.element_id(MpElement(0, (1, 1, 0)))
    assert mp_table.label(pair) == "a1 a2"  # degree 31/4 fits under 8


def test_table_product_past_cutoff_is_none(mp_table):
    a2 = mp_table.element_id(MpElement(0, (0, 1, 0)))
    assert mp_table.product(a2, a2) is None  # degree 21/2 > 8


def test_growth_is_the_truncated_product_formula(mp_table):
    kind, cutoff = mp_table.key_kind, mp_table.cutoff
    geometric = series_invert(Series.build(kind, cutoff, {0: 1, 1: -1}))
    expected = geometric
    for k in range(1, SPEC.depth + 1):
        terms = {F(0): 1}
        if SPEC.degrees[k] <= cutoff:  # factors past the cutoff contribute 1
            terms[SPEC.degrees[k]] = 1
        expected = series_mul(expected, Series.build(kind, cutoff, terms))
    assert growth_series(mp_table) == expected


def test_cross_model_agreement(mp_table):
    rewrite = RewriteModel(family_presentation(SPEC)).enumerate_up_to(F(8))
    mine = [mp_table.degree(e) for e in mp_table.all_elements()]
    theirs = [rewrite.degree(e) for e in rewrite.all_elements()]
    assert mine == theirs
    assert growth_series(mp_table) == growth_series(rewrite)
    assert skew_growth(mp_table) == skew_growth(rewrite)


def test_family_presentation_shape():
    pres = family_presentation(SPEC)
    assert [g.name for g in pres.generators] == ["a0", "a1", "a2", "a3"]
    assert [g.degree for g in pres.generators] == list(SPEC.degrees)
    # K squares plus one commutator per unordered generator pair
    assert len(pres.relations) == 3 + 6


def test_depth_cap_warning_on_canonical_p():
    # p = 4, 8 follows the canonical pattern; continuing it would add a
    # generator of degree 21/8 + 16/2 = 85/8, so cutoffs from there on warn
    model = builtin("mp", p=[4, 8])
    with pytest.warns(UserWarning, match="depth-2 family"):
        model.enumerate_up_to(F(85, 8))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        model.enumerate_up_to(F(10))
        builtin("mp", p=[4, 6]).enumerate_up_to(F(40))  # off-pattern: never warns
