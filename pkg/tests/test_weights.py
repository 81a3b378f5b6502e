import pytest
from hypothesis import given, strategies as st

from a22crystal.weights import (
    ALPHA0,
    ALPHA1,
    CARTAN,
    DELTA,
    HALF_DELTA,
    LAMBDA0,
    LAMBDA1,
    ClassicalWeight,
    Weight,
    dominant,
    level,
    pair,
)

ints = st.integers(-50, 50)
weights = st.builds(Weight, ints, ints, ints)


def test_pairings_reproduce_cartan_entries():
    assert pair(0, ALPHA1) == -4
    assert pair(1, ALPHA0) == -1
    for i, a_i in enumerate((ALPHA0, ALPHA1)):
        for j, a_j in enumerate((ALPHA0, ALPHA1)):
            assert pair(i, a_j) == CARTAN[i][j]


def test_delta_is_null_and_equals_two_alpha0_plus_alpha1():
    assert DELTA == Weight(0, 0, 2)
    assert DELTA == 2 * ALPHA0 + ALPHA1
    assert DELTA == 2 * HALF_DELTA
    assert pair(0, DELTA) == pair(1, DELTA) == 0


def test_levels():
    assert level(2 * LAMBDA0 + LAMBDA1) == 4
    assert level(LAMBDA1) == 2
    assert level(ALPHA0) == level(ALPHA1) == level(DELTA) == 0


def test_dominant_weights():
    assert dominant(4, 1) == Weight(2, 1, 0)
    assert dominant(4, 0) == Weight(4, 0, 0)
    assert level(dominant(7, 3)) == 7
    with pytest.raises(ValueError):
        dominant(4, 3)
    with pytest.raises(ValueError):
        dominant(0, 0)
    with pytest.raises(ValueError):
        dominant(3, -1)


def test_pair_rejects_bad_index():
    with pytest.raises(ValueError):
        pair(2, LAMBDA0)


def test_json_roundtrip():
    w = Weight(3, -2, 5)
    assert w.to_json() == {"L0": 3, "L1": -2, "half_delta": 5}
    assert Weight.from_json(w.to_json()) == w


@given(weights, weights, st.integers(-5, 5))
def test_pairing_and_level_are_linear(u, v, k):
    for i in (0, 1):
        assert pair(i, u + k * v) == pair(i, u) + k * pair(i, v)
    assert level(u - v) == level(u) - level(v)


@given(weights, weights)
def test_classical_projection_is_a_homomorphism(u, v):
    assert (u + v).cl() == u.cl() + v.cl()
    assert (u - v).cl() == u.cl() - v.cl()
    assert (u + 7 * HALF_DELTA).cl() == u.cl()
    assert isinstance(u.cl(), ClassicalWeight)
