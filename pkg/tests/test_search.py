from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lechlab.closure import is_integrally_closed
from lechlab.errors import DimensionUnsupported
from lechlab.ideals import colength, ideal, maximal_ideal, min_gens_count, power
from lechlab.inequalities import ideal_stats
from lechlab.search import (
    EnumerationSpec,
    enumerate_ideals,
    order_ideals,
    partition_count,
    partitions,
    structured_families,
    sup_ratio_curve,
)

from conftest import POLY2, POLY3, VER


def test_partition_counts():
    assert [partition_count(n) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n in range(1, 10):
        assert len(list(partitions(n))) == partition_count(n)


def test_small_enumerations():
    ideals = list(enumerate_ideals(EnumerationSpec(POLY2, max_colength=2)))
    assert ideals == [maximal_ideal(POLY2), ideal(POLY2, (1, 0), (0, 2)), ideal(POLY2, (2, 0), (0, 1))]
    assert len(list(enumerate_ideals(EnumerationSpec(POLY2, max_colength=5)))) == 18


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_bijection(n):
    ideals = list(enumerate_ideals(EnumerationSpec(POLY2, max_colength=n)))
    assert sum(1 for I in ideals if colength(I) == n) == partition_count(n)
    assert len(set(ideals)) == len(ideals)


def test_generic_growth_agrees_with_partitions():
    sizes = [len(D) for D in order_ideals(POLY2, 7)]
    for n in range(1, 8):
        assert sizes.count(n) == partition_count(n)


def test_veronese_closed_enumeration():
    closed = list(enumerate_ideals(EnumerationSpec(VER, max_colength=3, filter="integrally_closed")))
    assert closed and all(is_integrally_closed(I) for I in closed)
    assert maximal_ideal(VER) in closed
    everything = list(enumerate_ideals(EnumerationSpec(VER, max_colength=3)))
    assert len(closed) < len(everything)


def test_three_variables_exhaustive_unsupported():
    with pytest.raises(DimensionUnsupported):
        list(enumerate_ideals(EnumerationSpec(POLY3, max_colength=3)))


def test_random_mode_is_seeded():
    spec = EnumerationSpec(POLY3, mode="random", count=10, max_degree=3, seed=5)
    assert list(enumerate_ideals(spec)) == list(enumerate_ideals(spec))
    other = EnumerationSpec(POLY3, mode="random", count=10, max_degree=3, seed=6)
    assert list(enumerate_ideals(spec)) != list(enumerate_ideals(other))


def test_by_generators():
    ideals = list(enumerate_ideals(EnumerationSpec(POLY2, mode="by_generators", max_generators=2, max_degree=3)))
    assert all(min_gens_count(I) <= 2 for I in ideals)
    assert ideal(POLY2, (3, 0), (0, 3)) in ideals


def test_sup_curve_polynomial():
    rows = sup_ratio_curve(EnumerationSpec(POLY2), [1, 2, 3])
    assert [r["max_ratio"] for r in rows] == [Fraction(1, 2), Fraction(1, 2), Fraction(2, 3)]
    assert rows[-1]["argmax"] == "x^2, x*y, y^2"


def test_sup_curve_monotone():
    rows = sup_ratio_curve(EnumerationSpec(POLY2), [2, 4, 6, 8, 10])
    maxima = [r["max_ratio"] for r in rows]
    assert maxima == sorted(maxima)
    assert [r["count"] for r in rows] == [3, 11, 29, 66, 138]


def test_structured_families():
    fam = list(structured_families(POLY2, "max_powers", n=4))
    assert fam[-1] == power(maximal_ideal(POLY2), 4)
    assert ideal_stats(fam[-1]).ratio == Fraction(4, 5)
    (pp,) = structured_families(POLY2, "pure_powers", exponents=[2, 3])
    assert ideal_stats(pp).ratio == Fraction(1, 2)
    path = list(structured_families(POLY2, "hanes_extremal", N=3))
    assert all(min_gens_count(I) <= 3 for I in path)
    ratios = [ideal_stats(I).ratio for I in path]
    assert ratios == sorted(ratios)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 1000))
def test_random_stream_deterministic(seed):
    spec = EnumerationSpec(VER, mode="random", count=5, seed=seed, max_degree=3)
    assert list(enumerate_ideals(spec)) == list(enumerate_ideals(spec))
