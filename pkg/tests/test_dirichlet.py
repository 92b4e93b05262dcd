import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewgrowth.dirichlet import (
    KeyKind,
    Series,
    coerce_key,
    evaluate_partial,
    key_repeat,
    key_sub,
    parse_key,
    render_key,
    series_add,
    series_from_json,
    series_invert,
    series_mul,
    series_neg,
    series_one,
    series_to_json,
)
from skewgrowth.errors import (
    CutoffMismatchError,
    DomainError,
    KeyKindMismatchError,
    MalformedKeyError,
    NonUnitConstantTermError,
)

R = KeyKind.RATIONAL
M = KeyKind.MULTINT


# ------------------------------------------------------------------- keys

def test_coerce_rejects_floats():
    with pytest.raises(MalformedKeyError):
        coerce_key(R, 0.5)
    with pytest.raises(MalformedKeyError):
        coerce_key(M, 2.0)


def test_coerce_rejects_bad_values():
    with pytest.raises(MalformedKeyError):
        coerce_key(R, Fraction(-1, 2))
    with pytest.raises(MalformedKeyError):
        coerce_key(M, 0)
    with pytest.raises(MalformedKeyError):
        coerce_key(M, True)


def test_key_sub_is_partial():
    assert key_sub(R, Fraction(3), Fraction(1)) == Fraction(2)
    assert key_sub(R, Fraction(1), Fraction(3)) is None
    assert key_sub(M, 12, 4) == 3
    assert key_sub(M, 12, 5) is None


def test_key_repeat():
    assert key_repeat(R, Fraction(3, 2), 3) == Fraction(9, 2)
    assert key_repeat(M, 2, 5) == 32


@given(st.fractions(min_value=0, max_value=100))
def test_render_parse_roundtrip_rational(q):
    assert parse_key(R, render_key(R, q)) == q


@given(st.integers(min_value=1, max_value=10**6))
def test_render_parse_roundtrip_multint(n):
    assert parse_key(M, render_key(M, n)) == n


# ------------------------------------------------------------------ build

def test_build_merges_and_drops_zeros():
    f = Series.build(R, 8, [(1, 2), (Fraction(1), -2), (2, 3), (3, 0)])
    assert f.terms == {Fraction(2): 3}


def test_build_rejects_keys_past_cutoff():
    with pytest.raises(MalformedKeyError):
        Series.build(R, 4, {Fraction(9, 2): 1})


def test_str_rendering():
    f = Series.build(R, 8, {0: 1, Fraction(5, 2): -3})
    assert str(f) == "1*t^0 - 3*t^5/2"


# -------------------------------------------------------------- ring laws

def _rational_series(cutoff=Fraction(8)):
    keys = st.fractions(min_value=0, max_value=cutoff).filter(
        lambda q: q.denominator in (1, 2, 4)
    )
    return st.dictionaries(keys, st.integers(-5, 5), max_size=6).map(
        lambda terms: Series.build(R, cutoff, terms)
    )


def _multint_series(cutoff=30):
    return st.dictionaries(
        st.integers(1, cutoff), st.integers(-5, 5), max_size=6
    ).map(lambda terms: Series.build(M, cutoff, terms))


@given(_rational_series(), _rational_series(), _rational_series())
def test_rational_ring_laws(f, g, h):
    assert series_add(f, g) == series_add(g, f)
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(f, series_mul(g, h)) == series_mul(series_mul(f, g), h)
    left = series_mul(f, series_add(g, h))
    right = series_add(series_mul(f, g), series_mul(f, h))
    assert left == right
    assert series_add(f, series_neg(f)) == Series.build(R, f.cutoff, {})


@given(_multint_series(), _multint_series(), _multint_series())
def test_multint_ring_laws(f, g, h):
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(f, series_mul(g, h)) == series_mul(series_mul(f, g), h)


@given(_multint_series(), _multint_series())
def test_multint_convolution_matches_naive(f, g):
    naive = {}
    for ka, ca in f.terms.items():
        for kb, cb in g.terms.items():
            if ka * kb <= f.cutoff:
                naive[ka * kb] = naive.get(ka * kb, 0) + ca * cb
    assert series_mul(f, g) == Series.build(M, f.cutoff, naive)


# -------------------------------------------------------------- inversion

@given(_rational_series())
def test_invert_is_a_right_inverse(f):
    f = series_add(f, series_one(R, f.cutoff))  # force constant term ...
    if f.coefficient(0) not in (1, -1):
        return
    assert series_mul(f, series_invert(f)) == series_one(R, f.cutoff)


@given(_multint_series())
def test_invert_is_an_involution(f):
    f = series_add(f, series_one(M, f.cutoff))
    if f.coefficient(1) not in (1, -1):
        return
    assert series_invert(series_invert(f)) == f


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitConstantTermError):
        series_invert(Series.build(R, 8, {0: 2, 1: 1}))
    with pytest.raises(NonUnitConstantTermError):
        series_invert(Series.build(R, 8, {1: 1}))


def test_invert_geometric():
    f = Series.build(R, 6, {0: 1, 1: -1})
    assert series_invert(f) == Series.build(R, 6, {d: 1 for d in range(7)})


# ------------------------------------------------------------ mixed errors

def test_kind_mismatch_raises():
    with pytest.raises(KeyKindMismatchError):
        series_mul(series_one(R, 8), series_one(M, 8))


def test_cutoff_mismatch_raises():
    with pytest.raises(CutoffMismatchError):
        series_add(series_one(R, 8), series_one(R, 9))


# ------------------------------------------------------------------- JSON

@given(_rational_series())
def test_json_roundtrip_rational(f):
    assert series_from_json(json.loads(json.dumps(series_to_json(f)))) == f


@given(_multint_series())
def test_json_roundtrip_multint(f):
    assert series_from_json(json.loads(json.dumps(series_to_json(f)))) == f


# ------------------------------------------------------------- evaluation

def test_evaluate_rational_point():
    f = Series.build(R, 8, {0: 1, 1: -2})
    assert evaluate_partial(f, t0=0.25) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        evaluate_partial(f, t0=1.5)
    with pytest.raises(DomainError):
        evaluate_partial(f)


def test_evaluate_partial_zeta():
    f = Series.build(M, 100, {n: 1 for n in range(1, 101)})
    oracle = sum(n ** -2.0 for n in range(1, 101))
    assert evaluate_partial(f, s0=2.0) == pytest.approx(oracle)
    with pytest.raises(DomainError):
        evaluate_partial(f, s0=-1.0)
