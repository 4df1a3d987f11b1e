import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lechlab.errors import InfiniteColength, InvalidGenerator, InvalidPoint, RingMismatch, ZeroIdeal
from lechlab.ideals import (
    colength,
    colength_by_box,
    complement,
    contains,
    ideal,
    ideal_sum,
    is_m_primary,
    maximal_ideal,
    min_gens_count,
    minimalize,
    power,
    product,
    zero_ideal,
)

from conftest import POLY2, POLY3, VER, ideals_in


def gens(I):
    return set(I.gens)


def test_minimalize_examples():
    assert gens(minimalize([(3, 0), (1, 1), (2, 1), (0, 3)], POLY2)) == {(3, 0), (1, 1), (0, 3)}
    assert gens(minimalize([(1, 0), (0, 1)], POLY2)) == {(1, 0), (0, 1)}
    assert gens(minimalize([(2, 0), (1, 1), (0, 2), (3, 1)], VER)) == {(2, 0), (1, 1), (0, 2)}


def test_minimalize_rejects_points_outside_semigroup():
    with pytest.raises(InvalidGenerator):
        minimalize([(1, 0)], VER)
    with pytest.raises(InvalidGenerator):
        minimalize([(-1, 2)], POLY2)


def test_empty_generator_set_is_zero_ideal():
    Z = minimalize([], POLY2)
    assert Z.is_zero
    with pytest.raises(ZeroIdeal):
        min_gens_count(Z)


def test_contains_examples():
    I = ideal(POLY2, (3, 0), (1, 1), (0, 3))
    assert contains(I, (2, 1))
    assert not contains(I, (2, 0))
    assert not contains(maximal_ideal(VER), (0, 0))
    with pytest.raises(InvalidPoint):
        contains(maximal_ideal(VER), (1, 0))


def test_arithmetic_examples():
    m = maximal_ideal(POLY2)
    assert gens(power(m, 2)) == {(2, 0), (1, 1), (0, 2)}
    assert gens(product(ideal(POLY2, (2, 0), (0, 2)), m)) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    I = ideal(POLY2, (3, 0), (1, 1), (0, 3))
    assert gens(ideal_sum(I, ideal(POLY2, (2, 0)))) == {(2, 0), (1, 1), (0, 3)}
    assert m * m == m**2


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        maximal_ideal(POLY2) * maximal_ideal(VER)


def test_colength_examples():
    assert colength(maximal_ideal(POLY2)) == 1
    I = ideal(POLY2, (3, 0), (1, 1), (0, 3))
    assert colength(I) == 5
    assert sorted(complement(I)) == [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]
    m2 = power(maximal_ideal(VER), 2)
    assert gens(m2) == {(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)}
    assert colength(m2) == 4
    assert set(complement(m2)) == {(0, 0), (2, 0), (1, 1), (0, 2)}


def test_colength_not_primary():
    with pytest.raises(InfiniteColength):
        colength(ideal(POLY2, (2, 0), (1, 1)))


def test_min_gens_examples():
    m = maximal_ideal(POLY2)
    for n in range(1, 7):
        assert min_gens_count(power(m, n)) == n + 1
    assert min_gens_count(ideal(POLY2, (3, 0), (1, 1), (0, 3))) == 3
    assert min_gens_count(ideal(POLY2, (4, 0), (2, 1), (0, 3))) == 3


def test_is_m_primary_examples():
    assert not is_m_primary(ideal(POLY2, (2, 0), (1, 1)))
    assert is_m_primary(ideal(POLY2, (3, 0), (1, 1), (0, 3)))
    assert not is_m_primary(ideal(VER, (2, 0)))
    with pytest.raises(ZeroIdeal):
        is_m_primary(zero_ideal(POLY2))


def test_three_variable_colength():
    m = maximal_ideal(POLY3)
    for n in range(1, 5):
        # C(n+2, 3) monomials of degree < n
        assert colength(power(m, n)) == n * (n + 1) * (n + 2) // 6
    I = ideal(POLY3, (2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 0))
    assert colength(I) == colength_by_box(I) == 4


@settings(max_examples=100, deadline=None)
@given(ideals_in(POLY2, 5))
def test_minimalize_idempotent_and_membership_stable(I):
    J = minimalize(I.gens, POLY2)
    assert J == I
    redundant = list(I.gens) + [tuple(a + 1 for a in g) for g in I.gens]
    assert minimalize(redundant, POLY2) == I
    for p in itertools.product(range(7), repeat=2):
        assert contains(I, p) == any(all(a >= b for a, b in zip(p, g)) for g in redundant)


@settings(max_examples=60, deadline=None)
@given(st.one_of(ideals_in(POLY2), ideals_in(VER), ideals_in(POLY3, 3)))
def test_complement_matches_box_count(I):
    C = complement(I)
    assert C.is_downward_closed()
    assert len(C) == colength(I) == colength_by_box(I)


@settings(max_examples=60, deadline=None)
@given(st.one_of(ideals_in(POLY2), ideals_in(VER)), st.data())
def test_colength_monotone(I, data):
    extra = data.draw(st.sampled_from(sorted(complement(I))))
    J = ideal_sum(I, minimalize([extra], I.ambient))
    assert I <= J
    assert colength(I) >= colength(J)


@settings(max_examples=40, deadline=None)
@given(st.one_of(ideals_in(POLY2, 3), ideals_in(VER, 2)), st.integers(1, 3), st.integers(1, 3))
def test_power_additivity(I, a, b):
    assert power(I, a + b) == product(power(I, a), power(I, b))
