import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hyperlab.intervals import BOTTOM, TOP, IntervalValue, iv_scale
from hyperlab.ivfuzzy import (CarrierMismatch, IVFuzzyPoint, IVFuzzySet, PointRelation,
                              Semantics, ThresholdGrid, characteristic, critical_thresholds,
                              equivalent, level_set, relation_holds, satisfies)

from conftest import iv
from strategies import fuzzy_sets, intervals

RELATIONS = list(PointRelation)
SEMANTICS = list(Semantics)


def test_satisfies_examples(example_set):
    assert satisfies(IVFuzzyPoint(0, iv("4/5", "9/10")), example_set, PointRelation.IN)
    assert satisfies(IVFuzzyPoint(3, iv("1/2")), example_set, PointRelation.Q)
    assert satisfies(IVFuzzyPoint(3, iv("1/2")), example_set, PointRelation.Q,
                     Semantics.PAPER_ORDER)
    assert not satisfies(IVFuzzyPoint(3, iv("7/10")), example_set, PointRelation.IN)
    with pytest.raises(IndexError):
        satisfies(IVFuzzyPoint(7, TOP), example_set, PointRelation.IN)
    with pytest.raises(ValueError):
        IVFuzzyPoint(0, BOTTOM)


def test_relations_differ_between_semantics():
    # mu + s = (1, 11/10): one component reaches exactly one
    mu, s = iv("7/10"), iv("3/10", "2/5")
    assert relation_holds(mu, s, PointRelation.Q, Semantics.PAPER_ORDER)
    assert not relation_holds(mu, s, PointRelation.Q, Semantics.COMPONENTWISE)
    # belongs on one endpoint and q on the other
    mu, s = iv("3/5", "7/10"), iv("1/10", "4/5")
    assert relation_holds(mu, s, PointRelation.IN_OR_Q, Semantics.COMPONENTWISE)
    assert not relation_holds(mu, s, PointRelation.IN_OR_Q, Semantics.PAPER_ORDER)


@given(intervals(), intervals())
def test_compound_relations(mu, s):
    for sem in SEMANTICS:
        belongs = relation_holds(mu, s, PointRelation.IN, sem)
        quasi = relation_holds(mu, s, PointRelation.Q, sem)
        both = relation_holds(mu, s, PointRelation.IN_AND_Q, sem)
        either = relation_holds(mu, s, PointRelation.IN_OR_Q, sem)
        assert both == (belongs and quasi)
        assert either >= (belongs or quasi)
        if sem is Semantics.PAPER_ORDER:
            assert either == (belongs or quasi)


def test_level_set_examples(example_set):
    assert level_set(example_set, iv("7/10", "4/5")) == {0, 1, 2}
    assert level_set(example_set, BOTTOM) == {0, 1, 2, 3}
    chi = characteristic({0, 1}, 4)
    for s in (iv("1/10"), iv("1/2", "1"), TOP):
        assert level_set(chi, s) == {0, 1}


def test_characteristic():
    chi = characteristic({0}, 4)
    assert chi.mu == (TOP, BOTTOM, BOTTOM, BOTTOM)
    assert characteristic(set(), 4).mu == (BOTTOM,) * 4
    assert satisfies(IVFuzzyPoint(1, TOP), characteristic({0, 1}, 4), PointRelation.IN)
    with pytest.raises(IndexError):
        characteristic({5}, 4)


def test_support(example_set):
    A = IVFuzzySet((iv("0"), iv("0", "1/10"), iv("1/2")))
    assert A.support() == {1, 2}
    assert example_set.support() == {0, 1, 2, 3}


def test_critical_thresholds_examples(example_set):
    C, grid = critical_thresholds(IVFuzzySet((iv("1/2"),) * 4))
    assert C == [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1]
    assert len(grid) == 5 * 6 // 2 - 1
    assert BOTTOM not in grid
    C, _ = critical_thresholds(example_set)
    for k in (1, 2, 3, 4, 6, 7, 8, 9):
        assert Fraction(k, 10) in C


@given(fuzzy_sets(3))
def test_every_endpoint_is_critical(A):
    C, grid = critical_thresholds(A)
    for v in A.mu:
        assert {v.lo, v.hi, 1 - v.lo, 1 - v.hi} <= set(C)
    assert all(s.lo <= s.hi and not s.is_zero() for s in grid)


@given(fuzzy_sets(4))
@settings(max_examples=40)
def test_level_sets_are_antitone(A):
    _, grid = critical_thresholds(A)
    for s in grid[::3]:
        for t in grid[::5]:
            if s <= t:
                assert level_set(A, t) <= level_set(A, s)


@given(intervals(), intervals(), intervals())
def test_relation_monotonicity(mu, s, t):
    if s <= t:
        for sem in SEMANTICS:
            if relation_holds(mu, t, PointRelation.IN, sem):
                assert relation_holds(mu, s, PointRelation.IN, sem)
            if relation_holds(mu, s, PointRelation.Q, sem):
                assert relation_holds(mu, t, PointRelation.Q, sem)


def representative(grid, s):
    i, j = grid.rep_index(s.lo), grid.rep_index(s.hi)
    return grid.point(i, j)


@settings(max_examples=200)
@given(fuzzy_sets(4), st.lists(intervals(), min_size=1, max_size=25))
def test_grid_soundness(A, samples):
    grid = ThresholdGrid.for_sets(A)
    for s in samples:
        if s.is_zero():
            continue
        r = representative(grid, s)
        assert not r.is_zero()
        for mu in A.mu:
            for rel in RELATIONS:
                for sem in SEMANTICS:
                    assert relation_holds(mu, s, rel, sem) == relation_holds(mu, r, rel, sem)
        assert level_set(A, s) == level_set(A, r)


def test_relation_mask_matches_scalar_rule(example_set):
    grid = ThresholdGrid.for_sets(example_set)
    for mu in example_set.image():
        for rel in RELATIONS:
            for sem in SEMANTICS:
                mask = grid.relation_mask(mu, rel, sem)
                for i, j in grid.points():
                    assert mask[i, j] == relation_holds(mu, grid.point(i, j), rel, sem)
                assert not mask[0, 0]


def test_equivalent_examples(example_set):
    assert equivalent(example_set, example_set)
    assert equivalent(example_set, example_set.scaled(Fraction(1, 2)))
    assert not equivalent(characteristic({0}, 4), characteristic({0, 1}, 4))
    with pytest.raises(CarrierMismatch):
        equivalent(example_set, characteristic({0}, 3))


def test_equivalence_is_about_families_not_indices():
    A = IVFuzzySet((iv("9/10"), iv("1/2"), iv("1/10")))
    B = IVFuzzySet((iv("3/5"), iv("2/5"), iv("1/5")))
    assert equivalent(A, B)
    C = IVFuzzySet((iv("3/5"), iv("3/5"), iv("1/5")))
    assert not equivalent(A, C)


def test_chain_detection(example_set):
    assert example_set.is_chain()
    assert not IVFuzzySet((iv("1/5", "9/10"), iv("3/10", "4/5"))).is_chain()


def test_point_relation_parse():
    assert PointRelation.parse("invq") is PointRelation.IN_OR_Q
    assert PointRelation.parse("IN") is PointRelation.IN
    with pytest.raises(ValueError):
        PointRelation.parse("maybe")
