from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperlab import kernels
from hyperlab.classifiers import (FULL, LOWER, UPPER, AlphaBeta, ClassReport, Condition,
                                  MalformedThresholds, ThresholdPair, UnsupportedAlpha,
                                  Variant, is_alpha_beta, is_in_invq_closed, is_ordinary,
                                  is_threshold, level_criterion, upper_conditions)
from hyperlab.hyperstructure import NotValidated, enumerate_hyperideals, paper_24
from hyperlab.intervals import BOTTOM, MID, TOP, rmax, rmin
from hyperlab.ivfuzzy import (CarrierMismatch, IVFuzzySet, PointRelation, Semantics,
                              characteristic, relation_holds)
from hyperlab.oracle import IN_IN, IN_INVQ, INVQ_INVQ, Q_INVQ, slow_alpha_beta

from conftest import iv
from strategies import fuzzy_sets

ALL_AB = [AlphaBeta(a, b) for a in (PointRelation.IN, PointRelation.Q, PointRelation.IN_OR_Q)
          for b in PointRelation]


def test_ordinary_examples(R24, example_set):
    for ideal in enumerate_hyperideals(R24):
        assert is_ordinary(R24, characteristic(ideal, 4))
    report = is_ordinary(R24, example_set)
    assert not report
    assert report.condition is Condition.SUM
    assert report.anchor == "condition (i)"
    assert report.witness["tuple"] == (1, 2)
    assert report.witness["element"] == 3
    assert report.witness["left"] == iv("7/10", "4/5")
    assert is_ordinary(R24, IVFuzzySet((iv("3/10"),) * 4))


def test_report_json(R24, example_set):
    js = is_ordinary(R24, example_set).to_json()
    assert js == {"verdict": False, "condition": "Sum", "anchor": "condition (i)",
                  "witness": {"tuple": [1, 2], "element": 3, "left": ["7/10", "4/5"],
                              "right": ["3/5", "7/10"]}}
    assert is_ordinary(R24, characteristic({0}, 4)).to_json()["witness"] is None
    with pytest.raises(ValueError):
        ClassReport(False)


def test_alpha_beta_examples(R24, example_set):
    for ideal in enumerate_hyperideals(R24):
        assert is_alpha_beta(R24, characteristic(ideal, 4), IN_IN)
    assert is_alpha_beta(R24, example_set, IN_INVQ)
    assert not is_alpha_beta(R24, example_set, IN_IN)
    with pytest.raises(UnsupportedAlpha):
        AlphaBeta(PointRelation.IN_AND_Q, PointRelation.IN)


def test_literal_order_rejects_the_worked_example(R24, example_set):
    # Under the literal interval order the relation (1,2) -> 3 admits a
    # threshold that is neither below mu(3) nor quasi-coincident with it.
    report = is_alpha_beta(R24, example_set, IN_INVQ, Semantics.PAPER_ORDER)
    assert not report
    assert report.witness["tuple"] == (1, 2) and report.witness["element"] == 3


def test_carrier_and_validation_checks(R24, example_set):
    with pytest.raises(CarrierMismatch):
        is_ordinary(R24, characteristic({0}, 3))
    with pytest.raises(NotValidated):
        is_alpha_beta(paper_24(), example_set, IN_INVQ)


def check_witness(R, A, ab, report, semantics=Semantics.COMPONENTWISE):
    """The reported thresholds really break the quantified condition."""
    w = report.witness
    hyps = w["hypotheses"]
    assert hyps
    for h in hyps:
        assert relation_holds(A(h["element"]), h["threshold"], ab.alpha, semantics)
    ts = [h["threshold"] for h in hyps]
    if report.condition is Condition.SUM:
        assert len(hyps) == R.m and rmin(ts) == w["threshold"]
        assert tuple(h["element"] for h in hyps) == w["tuple"]
    elif report.condition is Condition.PRODUCT:
        assert rmax(ts) == w["threshold"]
        assert all(h["element"] in w["tuple"] for h in hyps)
    assert not relation_holds(A(w["element"]), w["threshold"], ab.beta, semantics)


@settings(max_examples=60, deadline=None)
@given(fuzzy_sets(4))
def test_witnesses_are_genuine(R24, A):
    for ab in ALL_AB:
        for sem in Semantics:
            report = is_alpha_beta(R24, A, ab, sem)
            if not report:
                check_witness(R24, A, ab, report, sem)


@settings(max_examples=25, deadline=None)
@given(fuzzy_sets(4))
def test_agrees_with_slow_oracle_on_random_sets(R24, A):
    for ab in (IN_IN, IN_INVQ, Q_INVQ, AlphaBeta(PointRelation.IN_OR_Q, PointRelation.IN_AND_Q)):
        for sem in Semantics:
            assert bool(is_alpha_beta(R24, A, ab, sem)) == bool(
                slow_alpha_beta(R24, A, ab, 20, sem))


@settings(max_examples=80, deadline=None)
@given(fuzzy_sets(4))
def test_hierarchy(R24, A):
    invq = bool(is_alpha_beta(R24, A, IN_INVQ))
    if is_ordinary(R24, A):
        assert invq
    if is_alpha_beta(R24, A, IN_IN):
        assert invq
    if is_alpha_beta(R24, A, INVQ_INVQ):
        assert invq
    assert invq == bool(is_in_invq_closed(R24, A, Variant.CORRECTED))


def test_characteristic_bridge(R24):
    for k in range(1, 5):
        for S in combinations(range(4), k):
            ideal = S in [tuple(sorted(I)) for I in enumerate_hyperideals(R24)]
            assert bool(is_alpha_beta(R24, characteristic(S, 4), IN_INVQ)) == ideal


def test_closed_form_examples(R24, example_set):
    assert is_in_invq_closed(R24, example_set, Variant.PAPER_LITERAL)
    assert is_in_invq_closed(R24, example_set, Variant.CORRECTED)
    flat = IVFuzzySet((iv("1/5"),) * 4)
    literal = is_in_invq_closed(R24, flat, Variant.PAPER_LITERAL)
    assert not literal and literal.anchor == "condition (iii2)"
    assert literal.witness["left"] == MID
    assert is_in_invq_closed(R24, flat, Variant.CORRECTED)
    for ideal in enumerate_hyperideals(R24):
        chi = characteristic(ideal, 4)
        assert is_in_invq_closed(R24, chi, Variant.CORRECTED)
        # the printed (iii2) puts [0.5,0.5] inside the rmax, so it demands
        # mu(g) >= [0.5,0.5] for every product: only ideals holding the
        # whole image of g survive
        literal = is_in_invq_closed(R24, chi, Variant.PAPER_LITERAL)
        assert bool(literal) == (set(R24.g_table) <= ideal)
        if not literal:
            assert literal.anchor == "condition (iii2)"


def test_threshold_examples(R24, example_set):
    assert not is_threshold(R24, example_set, FULL, Variant.PAPER_LITERAL)
    assert not is_threshold(R24, example_set, FULL, Variant.CORRECTED)
    assert is_threshold(R24, example_set, LOWER, Variant.CORRECTED)
    # condition (3) as printed needs [1,1] <= mu(g) whenever s2 = [1,1]
    ideal = characteristic({0, 1}, 4)
    assert is_threshold(R24, ideal, FULL, Variant.CORRECTED)
    assert not is_threshold(R24, IVFuzzySet((iv("1/5"),) * 4), FULL, Variant.PAPER_LITERAL)
    with pytest.raises(MalformedThresholds):
        ThresholdPair(TOP, MID)
    with pytest.raises(MalformedThresholds):
        ThresholdPair(MID, MID)
    with pytest.raises(MalformedThresholds):
        ThresholdPair(iv("1/5", "9/10"), iv("3/10", "4/5"))


@settings(max_examples=60, deadline=None)
@given(fuzzy_sets(4))
def test_threshold_specialisations(R24, A):
    assert bool(is_threshold(R24, A, LOWER)) == bool(is_in_invq_closed(R24, A))
    assert bool(is_threshold(R24, A, FULL)) == bool(is_ordinary(R24, A))
    assert bool(is_threshold(R24, A, UPPER)) == bool(upper_conditions(R24, A))


def test_level_examples(R24, example_set):
    assert level_criterion(R24, example_set, "lower")
    report = level_criterion(R24, characteristic({0, 3}, 4), "lower")
    assert not report and report.witness["subset"] == {0, 3}
    literal = level_criterion(R24, characteristic({0, 3}, 4), LOWER, Semantics.PAPER_ORDER)
    assert not literal and literal.witness["subset"] == {0, 3}
    with pytest.raises(MalformedThresholds):
        level_criterion(R24, example_set, "middle")


@settings(max_examples=60, deadline=None)
@given(fuzzy_sets(4))
def test_level_equivalences(R24, A):
    assert bool(is_ordinary(R24, A)) == bool(level_criterion(R24, A, FULL))
    assert bool(upper_conditions(R24, A)) == bool(level_criterion(R24, A, UPPER))
    if is_alpha_beta(R24, A, IN_INVQ):
        assert level_criterion(R24, A, LOWER)


def test_determinism(R24, example_set):
    for _ in range(3):
        assert is_alpha_beta(R24, example_set, IN_IN) == is_alpha_beta(R24, example_set, IN_IN)
        assert is_ordinary(R24, example_set).to_json() == is_ordinary(R24, example_set).to_json()


@pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")
@settings(max_examples=40, deadline=None)
@given(fuzzy_sets(4))
def test_backends_agree_on_closed_forms(R24, A):
    for variant in Variant:
        a = is_in_invq_closed(R24, A, variant, backend=kernels.python_backend)
        b = is_in_invq_closed(R24, A, variant, backend=kernels.compiled_backend)
        assert a == b
