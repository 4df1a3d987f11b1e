import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lechlab.errors import BadGeneratorChoice, BaseMismatch, DimensionUnsupported, InvalidGenerator
from lechlab.ideals import colength, ideal, maximal_ideal, power
from lechlab.tgraded import (
    bracket_power,
    bracket_power_experiment,
    double_graded_decomposition_check,
    monomial_model,
    mumford_chain_check,
    t_length,
    t_min_gens,
    t_multiplicity,
    t_power,
    t_product,
    tgraded,
)

from conftest import POLY1, POLY2, chains_in, random_chain

m = maximal_ideal(POLY2)
J = tgraded(POLY1, [[(2,)], [(1,)]])


def test_lengths():
    assert t_length(tgraded(POLY2, [m, m])) == 2
    assert t_length(J) == 3
    assert t_length(tgraded(POLY2, [ideal(POLY2, (3, 0), (1, 1), (0, 3))])) == 5


def test_products():
    P = t_power(tgraded(POLY2, [m]), 2)
    assert P.components == (power(m, 2), m)
    I0 = ideal(POLY2, (2, 0), (0, 3))
    J0 = ideal(POLY2, (1, 0), (0, 2))
    P = t_product(tgraded(POLY2, [I0]), tgraded(POLY2, [J0]))
    assert P.components == (I0 * J0, I0 + J0)
    assert [c.gens for c in t_power(J, 2).components] == [((4,),), ((3,),), ((2,),), ((1,),)]


def test_base_mismatch():
    with pytest.raises(BaseMismatch):
        t_product(J, tgraded(POLY2, [m]))


def test_chain_validation():
    with pytest.raises(InvalidGenerator):
        tgraded(POLY2, [m, power(m, 2)])
    with pytest.raises(InvalidGenerator):
        tgraded(POLY2, [ideal(POLY2, (1, 0))])


def test_min_gens_examples():
    r = t_min_gens(J)
    assert (r.mu, r.bound, r.tight) == (3, 3, True)
    r = t_min_gens(tgraded(POLY2, [m]))
    assert (r.mu, r.bound) == (3, 3)
    m2 = power(m, 2)
    r = t_min_gens(tgraded(POLY2, [m2, m2]))
    assert (r.mu, r.bound) == (4, 6)


def test_multiplicity_examples():
    assert t_multiplicity(tgraded(POLY2, [m])) == 1
    assert t_multiplicity(tgraded(POLY2, [m, m])) == 2
    assert t_multiplicity(J) == 4


def test_double_graded_examples():
    r = double_graded_decomposition_check(tgraded(POLY2, [m]))
    assert r.lengths_match and r.t_length == 1
    r = double_graded_decomposition_check(J)
    assert r.t_length == 3 and r.holds
    r = double_graded_decomposition_check(tgraded(POLY2, [ideal(POLY2, (2, 0), (0, 2)), m]))
    assert (r.t_length, r.closure_t_length) == (5, 4)
    assert r.e == r.closure_e == 8
    assert r.holds


def test_mumford_examples():
    r = mumford_chain_check(tgraded(POLY2, [m, m]))
    assert (r.e, r.length) == (2, 2)
    assert (r.lhs, r.mid, r.rhs) == (Fraction(1, 6), Fraction(1, 2), Fraction(1, 2))
    assert mumford_chain_check(tgraded(POLY2, [power(m, 2), m])).holds
    r = mumford_chain_check(tgraded(POLY2, [ideal(POLY2, (3, 0), (1, 1), (0, 3))]))
    assert r.mid == r.rhs


def test_bracket_power_example():
    gens = [((2,), 0), ((1,), 1), ((0,), 2)]
    B = bracket_power(J, gens, 4)
    assert B.K == 8
    assert [c.gens[0][0] for c in B.components] == [8] * 4 + [4] * 4
    assert t_length(B) == 48


def test_bracket_experiment():
    tr = bracket_power_experiment(J)
    assert tr.lengths == [3 * q * q for q in (2, 4, 8, 16, 32)]
    assert tr.identity_holds and tr.surjection_holds
    assert tr.limit_estimate == 3 == tr.target
    assert tr.lower_bound == Fraction(8, 3)
    assert tr.holds


def test_bracket_errors():
    with pytest.raises(DimensionUnsupported):
        bracket_power_experiment(tgraded(POLY2, [m, m]))
    with pytest.raises(BadGeneratorChoice):
        bracket_power_experiment(J, [((2,), 0), ((0,), 2)])


@settings(max_examples=40, deadline=None)
@given(st.one_of(chains_in(POLY1), chains_in(POLY2, 2)), st.one_of(chains_in(POLY1), chains_in(POLY2, 2)))
def test_convolution_matches_monomial_model(I, Jx):
    if I.base != Jx.base:
        return
    P = t_product(I, Jx)
    assert monomial_model(P) == monomial_model(I) * monomial_model(Jx)
    assert t_length(P) == colength(monomial_model(P))


@settings(max_examples=100, deadline=None)
@given(st.one_of(chains_in(POLY1), chains_in(POLY2)))
def test_min_gens_bound(I):
    assert t_min_gens(I).holds


def test_mumford_on_random_chains():
    rng = random.Random(7)
    for k in range(30):
        base = POLY1 if k % 2 else POLY2
        assert mumford_chain_check(random_chain(base, rng, 3, 2)).holds
