"""Multi-valued implication operators and implication-based hyperideals."""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import product

from .classifiers import ClassReport, Condition, MalformedThresholds, PASS, _require
from .hyperstructure import KrasnerHyperring
from .intervals import ONE, TOP, ZERO, IntervalValue, ScalarOutOfRange, rinf, rmax, rmin
from .ivfuzzy import IVFuzzySet, Semantics


class ImplicationOperator(enum.Enum):
    EARLY_ZADEH = "Im"
    LUKASIEWICZ = "Ia"
    GODEL = "Ig"
    CONTRAPOSITION_GODEL = "Icg"
    GAINES_RESCHER = "Igr"
    KLEENE_DIENES = "Ib"
    GOGUEN = "Igg"

    @classmethod
    def parse(cls, text: str) -> "ImplicationOperator":
        for op in cls:
            if op.value.lower() == text.strip().lower():
                return op
        raise ValueError(f"unknown implication operator {text!r}")


class ExtensionMode(enum.Enum):
    """How an implication is compared with an interval truth level.

    ``COMPONENTWISE`` evaluates ``I(x_lo, y_lo) >= t_lo`` and
    ``I(x_hi, y_hi) >= t_hi``.  ``BOX`` compares ``imp_interval(x, y) >= t``.
    """

    COMPONENTWISE = "componentwise"
    BOX = "box"


def _unit(x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ScalarOutOfRange(f"{x} outside [0, 1]")
    return x


def imp_scalar(op: ImplicationOperator, a, b) -> Fraction:
    a, b = _unit(a), _unit(b)
    if op is ImplicationOperator.EARLY_ZADEH:
        return max(ONE - a, min(a, b))
    if op is ImplicationOperator.LUKASIEWICZ:
        return min(ONE, ONE - a + b)
    if op is ImplicationOperator.KLEENE_DIENES:
        return max(ONE - a, b)
    if a <= b:
        return ONE
    if op is ImplicationOperator.GODEL:
        return b
    if op is ImplicationOperator.CONTRAPOSITION_GODEL:
        return ONE - a
    if op is ImplicationOperator.GAINES_RESCHER:
        return ZERO
    return b / a  # Goguen; a > b >= 0 so a > 0


def _zadeh_range(x: IntervalValue, y: IntervalValue) -> IntervalValue:
    # Early Zadeh is not antitone in its first argument, so the image of the
    # box is found from the breakpoints of the piecewise-linear section.
    def section(b):
        cands = {x.lo, x.hi}
        for p in (Fraction(1, 2), b, ONE - b):
            if x.lo <= p <= x.hi:
                cands.add(p)
        return [imp_scalar(ImplicationOperator.EARLY_ZADEH, a, b) for a in cands]

    return IntervalValue(min(section(y.lo)), max(section(y.hi)))


def imp_interval(op: ImplicationOperator, x: IntervalValue, y: IntervalValue) -> IntervalValue:
    """Image of the box ``x * y``: ``[I(x.hi, y.lo), I(x.lo, y.hi)]``.

    Every operator except Early Zadeh is antitone in the premise and
    monotone in the consequent, so the box corners give the exact image.
    """
    if op is ImplicationOperator.EARLY_ZADEH:
        return _zadeh_range(x, y)
    return IntervalValue(imp_scalar(op, x.hi, y.lo), imp_scalar(op, x.lo, y.hi))


def implication_holds(op, x: IntervalValue, y: IntervalValue, t: IntervalValue,
                      mode: ExtensionMode = ExtensionMode.COMPONENTWISE) -> bool:
    if mode is ExtensionMode.BOX:
        return imp_interval(op, x, y) >= t
    return imp_scalar(op, x.lo, y.lo) >= t.lo and imp_scalar(op, x.hi, y.hi) >= t.hi


def _mode(semantics) -> ExtensionMode:
    if isinstance(semantics, ExtensionMode):
        return semantics
    if semantics is Semantics.PAPER_ORDER:
        return ExtensionMode.BOX
    return ExtensionMode.COMPONENTWISE


def is_t_implication_based(R: KrasnerHyperring, A: IVFuzzySet, op: ImplicationOperator,
                           t: IntervalValue,
                           semantics=ExtensionMode.COMPONENTWISE) -> ClassReport:
    """Check that the three hyperideal implications are ``t``-tautologies."""
    if t.is_zero():
        raise MalformedThresholds("the truth level must be nonzero")
    _require(R, A)
    mode = _mode(semantics)

    def fail(cond, anchor, args, c, x, y):
        return ClassReport(False, cond, anchor,
                           {"tuple": args, "element": c, "premise": x, "consequent": y,
                            "value": imp_interval(op, x, y)})

    for idx, args in enumerate(product(R.carrier, repeat=R.m)):
        x = rmin(A(a) for a in args)
        outs = sorted(R.f_table[idx])
        y = rinf(A(c) for c in outs)
        if not implication_holds(op, x, y, t, mode):
            c = min(outs, key=lambda c: (A(c).lo, A(c).hi, c))
            return fail(Condition.SUM, "implication condition (1)", args, c, x, y)
    for b in R.carrier:
        nb = R.inverses[b]
        if not implication_holds(op, A(b), A(nb), t, mode):
            return fail(Condition.NEGATION, "implication condition (2)", (b,), nb, A(b), A(nb))
    for idx, args in enumerate(product(R.carrier, repeat=R.n)):
        c = R.g_table[idx]
        x = rmax(A(b) for b in args)
        if not implication_holds(op, x, A(c), t, mode):
            return fail(Condition.PRODUCT, "implication condition (3)", args, c, x, A(c))
    return PASS


def is_fuzzifying(R: KrasnerHyperring, A: IVFuzzySet,
                  semantics=ExtensionMode.COMPONENTWISE) -> ClassReport:
    """Lukasiewicz implications evaluated as full tautologies."""
    return is_t_implication_based(R, A, ImplicationOperator.LUKASIEWICZ, TOP, semantics)
