"""Deciders for the fuzzy hyperideal notions, each returning a ClassReport.

Closed-form conditions run through the exhaustive kernels on an integer
encoding of the membership values.  ``is_alpha_beta`` eliminates the
threshold quantifiers: for a tuple it computes which effective thresholds
``r`` are reachable from per-argument hypothesis regions, then tests the
conclusion at every representative point of the critical grid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Union

import numpy as np

from . import kernels
from .hyperstructure import KrasnerHyperring, _unindex, is_hyperideal
from .intervals import BOTTOM, MID, TOP, IntervalValue, format_rational, rmax, rmin
from .ivfuzzy import (IVFuzzySet, PointRelation, Semantics, ThresholdGrid, check_carrier,
                      component_level, critical_points, level_set, with_midpoints)


class UnsupportedAlpha(ValueError):
    pass


class MalformedThresholds(ValueError):
    pass


class Condition(enum.Enum):
    SUM = "Sum"
    NEGATION = "Negation"
    PRODUCT = "Product"


class Variant(enum.Enum):
    PAPER_LITERAL = "PaperLiteral"
    CORRECTED = "Corrected"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        for v in cls:
            if v.value.lower() == text.strip().lower():
                return v
        raise ValueError(f"unknown variant {text!r}")


@dataclass(frozen=True)
class AlphaBeta:
    alpha: PointRelation
    beta: PointRelation

    def __post_init__(self):
        if self.alpha is PointRelation.IN_AND_Q:
            raise UnsupportedAlpha("alpha = in-and-q is not a meaningful hypothesis")

    @classmethod
    def parse(cls, text: str) -> "AlphaBeta":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'alpha,beta', got {text!r}")
        return cls(PointRelation.parse(parts[0]), PointRelation.parse(parts[1]))

    def __str__(self) -> str:
        return f"({self.alpha.value},{self.beta.value})"


@dataclass(frozen=True)
class ThresholdPair:
    s1: IntervalValue
    s2: IntervalValue

    def __post_init__(self):
        if not self.s1 < self.s2:
            raise MalformedThresholds(f"need s1 < s2, got {self.s1!r} and {self.s2!r}")

    def to_json(self) -> list:
        return [self.s1.to_json(), self.s2.to_json()]


LOWER = ThresholdPair(BOTTOM, MID)
UPPER = ThresholdPair(MID, TOP)
FULL = ThresholdPair(BOTTOM, TOP)
NAMED_RANGES = {"lower": LOWER, "upper": UPPER, "full": FULL}


def _jsonable(value):
    if isinstance(value, IntervalValue):
        return value.to_json()
    if isinstance(value, (tuple, list, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


@dataclass(frozen=True)
class ClassReport:
    verdict: bool
    condition: Optional[Condition] = None
    anchor: str = ""
    witness: Optional[dict] = field(default=None, compare=True)

    def __post_init__(self):
        if self.verdict != (self.witness is None):
            raise ValueError("a witness is present exactly when the verdict is false")

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "condition": self.condition.value if self.condition else None,
                "anchor": self.anchor or None,
                "witness": _jsonable(self.witness)}

    def describe(self) -> str:
        if self.verdict:
            return "holds"
        parts = [f"fails at {self.anchor}"]
        for key, value in self.witness.items():
            parts.append(f"{key}={_jsonable(value)}")
        return "; ".join(parts)


PASS = ClassReport(True)


# ---------------------------------------------------------------- closed forms

def _encode(A: IVFuzzySet, *extra: IntervalValue):
    vals = list(A.mu) + list(extra)
    den = 1
    for v in vals:
        den = math.lcm(den, v.lo.denominator, v.hi.denominator)
    lo = [int(v.lo * den) for v in A.mu]
    hi = [int(v.hi * den) for v in A.mu]

    def enc(v):
        return int(v.lo * den), int(v.hi * den)

    return lo, hi, enc


def _require(R: KrasnerHyperring, A: IVFuzzySet):
    if not R.is_validated:
        from .hyperstructure import NotValidated
        raise NotValidated("classification needs a validated structure")
    check_carrier(R.size, A)


def _clipped(R, A, s1, s2, variant, anchors, backend=None) -> ClassReport:
    """rmin{mu(a_i), s2} <= rmax{mu(c), s1} and its negation/product siblings."""
    _require(R, A)
    be = backend or kernels.backend
    lo, hi, enc = _encode(A, s1, s2)
    cap, floor = enc(s2), enc(s1)

    hit = be.sum_violation(R.f_masks, R.size, R.m, lo, hi, cap, floor)
    if hit is not None:
        idx, c = hit
        args = _unindex(idx, R.size, R.m)
        left = rmin([A(a) for a in args] + [s2])
        return ClassReport(False, Condition.SUM, anchors[0],
                           {"tuple": args, "element": c, "left": left,
                            "right": rmax([A(c), s1])})

    for b in R.carrier:
        nb = R.inverses[b]
        left, right = rmin([A(b), s2]), rmax([A(nb), s1])
        if not left <= right:
            return ClassReport(False, Condition.NEGATION, anchors[1],
                               {"tuple": (b,), "element": nb, "left": left, "right": right})

    if variant is Variant.PAPER_LITERAL:
        join, top = s2, TOP
    else:
        join, top = BOTTOM, s2
    idx = be.product_violation(R.g_table, R.size, R.n, lo, hi, enc(join), enc(top), floor)
    if idx is not None:
        args = _unindex(idx, R.size, R.n)
        c = R.g_table[idx]
        left = rmin([rmax([A(b) for b in args] + [join]), top])
        return ClassReport(False, Condition.PRODUCT, anchors[2],
                           {"tuple": args, "element": c, "left": left,
                            "right": rmax([A(c), s1])})
    return PASS


def is_ordinary(R: KrasnerHyperring, A: IVFuzzySet, backend=None) -> ClassReport:
    return _clipped(R, A, BOTTOM, TOP, Variant.CORRECTED,
                    ("condition (i)", "condition (ii)", "condition (iii)"), backend)


def is_in_invq_closed(R: KrasnerHyperring, A: IVFuzzySet,
                      variant: Variant = Variant.CORRECTED, backend=None) -> ClassReport:
    return _clipped(R, A, BOTTOM, MID, variant,
                    ("condition (i2)", "condition (ii2)", "condition (iii2)"), backend)


def is_threshold(R: KrasnerHyperring, A: IVFuzzySet, th: ThresholdPair,
                 variant: Variant = Variant.CORRECTED, backend=None) -> ClassReport:
    if not isinstance(th, ThresholdPair):
        raise MalformedThresholds("expected a ThresholdPair")
    return _clipped(R, A, th.s1, th.s2, variant,
                    ("threshold condition (1)", "threshold condition (2)",
                     "threshold condition (3)"), backend)


def upper_conditions(R: KrasnerHyperring, A: IVFuzzySet, backend=None) -> ClassReport:
    """The three rmax conditions paired with levels above [0.5,0.5]."""
    return _clipped(R, A, MID, TOP, Variant.CORRECTED,
                    ("upper condition (1)", "upper condition (2)", "upper condition (3)"),
                    backend)


# ---------------------------------------------------------------- (alpha, beta)

def _suffix_any(H, axis):
    return np.flip(np.logical_or.accumulate(np.flip(H, axis), axis=axis), axis)


def _prefix_any(H, axis):
    return np.logical_or.accumulate(H, axis=axis)


class _Regions:
    """Per-value hypothesis masks plus the reachability summaries of each."""

    def __init__(self, grid: ThresholdGrid, alpha, beta, semantics):
        self.grid = grid
        self.alpha, self.beta, self.semantics = alpha, beta, semantics
        self._hyp, self._concl, self._summ = {}, {}, {}

    def hyp(self, v):
        if v not in self._hyp:
            self._hyp[v] = self.grid.relation_mask(v, self.alpha, self.semantics)
        return self._hyp[v]

    def concl(self, v):
        if v not in self._concl:
            self._concl[v] = self.grid.relation_mask(v, self.beta, self.semantics)
        return self._concl[v]

    def summary(self, v, mode):
        """(full, lo_tight, hi_tight, exact) masks indexed by the effective threshold.

        For ``mode="min"``: full[r] iff some t in H has t >= r; lo_tight[r] iff
        some t in H has t.lo == r.lo and t.hi >= r.hi; and symmetrically.
        ``"max"`` flips every inequality.
        """
        key = (v, mode)
        if key not in self._summ:
            H = self.hyp(v)
            sweep = _suffix_any if mode == "min" else _prefix_any
            lo_tight = sweep(H, 1)
            hi_tight = sweep(H, 0)
            full = sweep(lo_tight, 0)
            self._summ[key] = (full, lo_tight, hi_tight, H)
        return self._summ[key]


def _achievable_all(regions, values, mode):
    """Effective thresholds reachable with one hypothesis per argument."""
    summ = [regions.summary(v, mode) for v in values]
    full = np.logical_and.reduce([s[0] for s in summ])
    tight = np.logical_or.reduce([s[3] for s in summ])
    for i, si in enumerate(summ):
        others = [s[2] for j, s in enumerate(summ) if j != i]
        if others:
            tight = tight | (si[1] & np.logical_or.reduce(others))
    return full & tight & regions.grid.valid


def _achievable_any(regions, values, mode):
    """Effective thresholds reachable from any nonempty subset of the arguments."""
    summ = [regions.summary(v, mode) for v in values]
    out = np.logical_or.reduce([s[3] for s in summ])
    for i, si in enumerate(summ):
        others = [s[2] for j, s in enumerate(summ) if j != i]
        if others:
            out = out | (si[1] & np.logical_or.reduce(others))
    return out & regions.grid.valid


def _first_true(mask):
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return None
    return divmod(int(idx[0]), mask.shape[1])


def _reconstruct(regions, values, r, mode, subset):
    """Concrete per-argument thresholds whose rmin/rmax is the grid point ``r``."""
    grid = regions.grid
    ri, rj = r
    better = (lambda a, b: a >= b) if mode == "min" else (lambda a, b: a <= b)
    cands = []
    for v in values:
        H = regions.hyp(v)
        pts = [(i, j) for i, j in zip(*np.nonzero(H)) if better(i, ri) and better(j, rj)]
        cands.append(pts)
    order = list(range(len(values)))
    if subset:
        for i in order:
            if (ri, rj) in cands[i]:
                return {i: (ri, rj)}
        for i in order:
            for j in order:
                if i != j:
                    a = [p for p in cands[i] if p[0] == ri]
                    b = [p for p in cands[j] if p[1] == rj]
                    if a and b:
                        return {i: a[0], j: b[0]}
        return {}
    chosen = {}
    for i in order:
        if (ri, rj) in cands[i]:
            chosen = {k: (ri, rj) if k == i else cands[k][0] for k in order}
            return chosen
    for i in order:
        for j in order:
            a = [p for p in cands[i] if p[0] == ri]
            b = [p for p in cands[j] if p[1] == rj]
            if i != j and a and b:
                return {k: a[0] if k == i else b[0] if k == j else cands[k][0]
                        for k in order}
    return {}


def is_alpha_beta(R: KrasnerHyperring, A: IVFuzzySet, ab: AlphaBeta,
                  semantics: Semantics = Semantics.COMPONENTWISE) -> ClassReport:
    """Decide the quantified (alpha, beta) hyperideal conditions exactly.

    Condition (1) takes one hypothesis per argument with threshold rmin;
    condition (3) takes the hypotheses of any nonempty set of arguments with
    threshold rmax, which is what makes g-absorption expressible.
    """
    if not isinstance(ab, AlphaBeta):
        raise TypeError("expected an AlphaBeta")
    if ab.alpha is PointRelation.IN_AND_Q:
        raise UnsupportedAlpha("alpha = in-and-q is not supported")
    _require(R, A)
    grid = ThresholdGrid.for_sets(A)
    regions = _Regions(grid, ab.alpha, ab.beta, semantics)
    verdict_cache = {}

    def check(values, conclusion, mode, subset):
        key = (tuple(sorted(values, key=lambda v: (v.lo, v.hi))), conclusion, mode, subset)
        if key not in verdict_cache:
            ach_key = key[0]
            reach = (_achievable_any if subset else _achievable_all)(regions, list(ach_key), mode)
            verdict_cache[key] = _first_true(reach & ~regions.concl(conclusion))
        return verdict_cache[key]

    def failure(cond, anchor, args, c, r, mode, subset):
        values = [A(a) for a in args]
        chosen = _reconstruct(regions, values, r, mode, subset)
        hyps = [{"element": args[k], "threshold": grid.point(*p)} for k, p in sorted(chosen.items())]
        return ClassReport(False, cond, anchor,
                           {"tuple": args, "element": c, "threshold": grid.point(*r),
                            "hypotheses": hyps})

    for idx, args in enumerate(product(R.carrier, repeat=R.m)):
        values = [A(a) for a in args]
        for c in sorted(R.f_table[idx]):
            r = check(values, A(c), "min", False)
            if r is not None:
                return failure(Condition.SUM, "condition (1)", args, c, r, "min", False)

    for b in R.carrier:
        nb = R.inverses[b]
        bad = regions.hyp(A(b)) & ~regions.concl(A(nb))
        r = _first_true(bad)
        if r is not None:
            return ClassReport(False, Condition.NEGATION, "condition (2)",
                               {"tuple": (b,), "element": nb, "threshold": grid.point(*r),
                                "hypotheses": [{"element": b, "threshold": grid.point(*r)}]})

    for idx, args in enumerate(product(R.carrier, repeat=R.n)):
        c = R.g_table[idx]
        r = check([A(a) for a in args], A(c), "max", True)
        if r is not None:
            return failure(Condition.PRODUCT, "condition (3)", args, c, r, "max", True)
    return PASS


# ---------------------------------------------------------------- level sets

def _resolve_range(rng: Union[str, ThresholdPair]) -> ThresholdPair:
    if isinstance(rng, ThresholdPair):
        return rng
    try:
        return NAMED_RANGES[str(rng).lower()]
    except KeyError:
        raise MalformedThresholds(f"unknown level range {rng!r}") from None


def level_criterion(R: KrasnerHyperring, A: IVFuzzySet,
                    rng: Union[str, ThresholdPair] = "full",
                    semantics: Semantics = Semantics.COMPONENTWISE) -> ClassReport:
    """Are all nonempty level subsets in the threshold range hyperideals?

    Componentwise, each endpoint function is cut at every scalar in the
    corresponding open-closed range; with ``PAPER_ORDER`` the interval
    levels are taken at grid thresholds ``s1 < s <= s2``.
    """
    th = _resolve_range(rng)
    _require(R, A)
    anchor = "level subsets"
    if semantics is Semantics.COMPONENTWISE:
        for comp in ("lo", "hi"):
            a, b = getattr(th.s1, comp), getattr(th.s2, comp)
            for x in with_midpoints(critical_points(A.mu, (a, b))):
                if not a < x <= b:
                    continue
                S = component_level(A, comp, x)
                if S:
                    check = is_hyperideal(R, S)
                    if not check:
                        return ClassReport(False, None, anchor,
                                           {"component": comp, "threshold": x,
                                            "subset": S, "reason": check.reason})
        return PASS
    grid = ThresholdGrid.for_sets(A, extra=(th.s1.lo, th.s1.hi, th.s2.lo, th.s2.hi))
    for i, j in grid.points():
        s = grid.point(i, j)
        if not (th.s1 < s and s <= th.s2):
            continue
        S = level_set(A, s)
        if S:
            check = is_hyperideal(R, S)
            if not check:
                return ClassReport(False, None, anchor,
                                   {"threshold": s, "subset": S, "reason": check.reason})
    return PASS
