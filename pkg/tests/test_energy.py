import itertools

import pytest

import oracles
from a22crystal.adjoint import AdjointCrystal, AdjointElem, LimitElem
from a22crystal.crystal import AffineElem
from a22crystal.energy import (
    H_affine,
    grade_gap,
    h_classical,
    verify_energy_axioms,
    verify_h_invariance,
    verify_H_constancy,
    verify_zero_energy_condition,
)


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_energy_matches_propagated_energy(l):
    ref = oracles.energy_by_propagation(l)
    assert len(ref) == len(AdjointCrystal(l)) ** 2
    for (b1, b2), v in ref.items():
        assert h_classical(AdjointElem(*b1, l), AdjointElem(*b2, l)) == v


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_energy_axioms(l):
    assert verify_energy_axioms(l).ok
    assert verify_h_invariance(l).ok


def test_ground_energy_vanishes():
    for l in range(1, 9):
        for a in range(l // 2 + 1):
            b = AdjointElem(a, a, l)
            assert h_classical(b, b) == 0


def test_levels_must_agree():
    with pytest.raises(ValueError):
        h_classical(AdjointElem(0, 0, 3), AdjointElem(0, 0, 4))


def test_affine_energy_definition():
    b1, b2 = AdjointElem(1, 2, 4), AdjointElem(0, 0, 4)
    h = h_classical(b1, b2)
    assert H_affine(AffineElem(b1, -3), AffineElem(b2, -5)) == -3 + 5 - h


def test_limit_energy_uses_same_formula():
    assert h_classical(LimitElem(-1, 2), LimitElem(3, 0)) == max(-2, 2, 3 + 2 + 3, 1 + 3)


@pytest.mark.parametrize("l", [1, 2])
def test_H_constant_along_edges(l):
    assert verify_H_constancy(l, 3, 4).ok


@pytest.mark.parametrize("l", [1, 2, 3])
def test_zero_energy_condition_matches_grade_gap(l):
    assert verify_zero_energy_condition(l, 5).ok


def test_grade_gap_literal():
    # independently evaluated
    for (x1, y1), (x0, y0) in itertools.product(oracles.adj(3), repeat=2):
        s1, s0 = x1 + y1, x0 + y0
        want = max(s1 - s0, s0 - s1, s0 + y1 - 3 * x1, s1 + x0 - 3 * y0)
        assert grade_gap(AdjointElem(x1, y1, 3), AdjointElem(x0, y0, 3)) == want
