"""Interval-valued fuzzy sets, fuzzy interval values and their relations.

Two semantics are offered for the point relations:

``COMPONENTWISE`` (default)
    A relation holds iff it holds at both endpoints with the scalar rules
    ``s <= mu`` (belongs) and ``s + mu > 1`` (quasi-coincident).  Under this
    reading an interval-valued fuzzy set behaves as a pair of ordinary fuzzy
    sets, and every classical equivalence lifts endpoint by endpoint.

``PAPER_ORDER``
    ``belongs`` is the componentwise order, ``q`` compares the endpoint sum
    against ``[1,1]`` with ``>`` meaning "``>=`` and not equal", and the
    compound relations are plain boolean combinations.  Kept for
    sensitivity runs; several closed forms do not hold under it.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .intervals import (BOTTOM, HALF, ONE, TOP, ZERO, IntervalValue, SumConvention,
                        iv_scale, iv_sum_exceeds_one)


class CarrierMismatch(ValueError):
    pass


class PointRelation(enum.Enum):
    IN = "in"
    Q = "q"
    IN_OR_Q = "invq"
    IN_AND_Q = "inaq"

    @classmethod
    def parse(cls, text: str) -> "PointRelation":
        aliases = {"in": cls.IN, "q": cls.Q, "invq": cls.IN_OR_Q, "in_or_q": cls.IN_OR_Q,
                   "inaq": cls.IN_AND_Q, "in_and_q": cls.IN_AND_Q}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown relation {text!r}") from None


class Semantics(enum.Enum):
    COMPONENTWISE = "componentwise"
    PAPER_ORDER = "paper-order"


@dataclass(frozen=True)
class IVFuzzySet:
    mu: tuple[IntervalValue, ...]

    def __post_init__(self):
        mu = tuple(self.mu)
        if not mu:
            raise ValueError("fuzzy set over an empty carrier")
        for v in mu:
            if not isinstance(v, IntervalValue):
                raise TypeError(f"membership values must be IntervalValue, got {v!r}")
        object.__setattr__(self, "mu", mu)

    @property
    def size(self) -> int:
        return len(self.mu)

    def __call__(self, x: int) -> IntervalValue:
        return self.mu[x]

    @classmethod
    def from_mapping(cls, size: int, values: Mapping[int, IntervalValue]) -> "IVFuzzySet":
        return cls(tuple(values.get(x, BOTTOM) for x in range(size)))

    def image(self) -> frozenset:
        return frozenset(self.mu)

    def support(self) -> frozenset:
        return frozenset(x for x, v in enumerate(self.mu) if not v.is_zero())

    def is_chain(self) -> bool:
        vals = sorted(self.image(), key=lambda v: (v.lo, v.hi))
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def scaled(self, k) -> "IVFuzzySet":
        return IVFuzzySet(tuple(iv_scale(k, v) for v in self.mu))

    def __repr__(self) -> str:
        return "IVFuzzySet(" + ", ".join(f"{x}:{v!r}" for x, v in enumerate(self.mu)) + ")"


@dataclass(frozen=True)
class IVFuzzyPoint:
    support: int
    value: IntervalValue

    def __post_init__(self):
        if self.value.is_zero():
            raise ValueError("a fuzzy interval value needs a nonzero interval")


def relation_holds(mu: IntervalValue, s: IntervalValue, rel: PointRelation,
                   semantics: Semantics = Semantics.COMPONENTWISE) -> bool:
    """Does a point with threshold ``s`` stand in ``rel`` to membership ``mu``?"""
    if semantics is Semantics.COMPONENTWISE:
        in_lo, in_hi = s.lo <= mu.lo, s.hi <= mu.hi
        q_lo, q_hi = s.lo + mu.lo > ONE, s.hi + mu.hi > ONE
        if rel is PointRelation.IN:
            return in_lo and in_hi
        if rel is PointRelation.Q:
            return q_lo and q_hi
        if rel is PointRelation.IN_OR_Q:
            return (in_lo or q_lo) and (in_hi or q_hi)
        return in_lo and q_lo and in_hi and q_hi
    belongs = s <= mu
    quasi = iv_sum_exceeds_one(mu, s, SumConvention.PAPER_ORDER)
    if rel is PointRelation.IN:
        return belongs
    if rel is PointRelation.Q:
        return quasi
    if rel is PointRelation.IN_OR_Q:
        return belongs or quasi
    return belongs and quasi


def satisfies(p: IVFuzzyPoint, A: IVFuzzySet, rel: PointRelation,
              semantics: Semantics = Semantics.COMPONENTWISE) -> bool:
    if not 0 <= p.support < A.size:
        raise IndexError(f"support {p.support} outside carrier of size {A.size}")
    return relation_holds(A(p.support), p.value, rel, semantics)


def level_set(A: IVFuzzySet, s: IntervalValue) -> frozenset:
    return frozenset(x for x, v in enumerate(A.mu) if v >= s)


def component_level(A: IVFuzzySet, component: str, x: Fraction) -> frozenset:
    """``{a : mu_lo(a) >= x}`` or ``{a : mu_hi(a) >= x}``."""
    attr = "lo" if component == "lo" else "hi"
    return frozenset(a for a, v in enumerate(A.mu) if getattr(v, attr) >= x)


def characteristic(S: Iterable[int], size: int) -> IVFuzzySet:
    S = frozenset(S)
    if not all(0 <= x < size for x in S):
        raise IndexError("subset member out of range")
    return IVFuzzySet(tuple(TOP if x in S else BOTTOM for x in range(size)))


def critical_points(values: Iterable[IntervalValue], extra: Iterable[Fraction] = ()) -> list:
    pts = {ZERO, HALF, ONE}
    for v in values:
        pts.update((v.lo, v.hi, ONE - v.lo, ONE - v.hi))
    pts.update(extra)
    return sorted(pts)


def with_midpoints(points: Sequence[Fraction]) -> list:
    out = [points[0]]
    for a, b in zip(points, points[1:]):
        out.extend(((a + b) / 2, b))
    return out


def critical_thresholds(A: IVFuzzySet, extra: Iterable[Fraction] = ()) -> tuple[list, list]:
    """Critical scalars (with midpoints) and the nonzero interval grid built on them."""
    C = with_midpoints(critical_points(A.mu, extra))
    grid = [IntervalValue(a, b) for i, a in enumerate(C) for b in C[i:]
            if not (a == 0 and b == 0)]
    return C, grid


class ThresholdGrid:
    """Index-space view of a critical-threshold grid.

    ``values[k]`` is the k-th scalar; point ``(i, j)`` is ``[values[i], values[j]]``.
    Scalars at even positions are critical points, odd positions are midpoints,
    so every cell of the induced partition has exactly one representative.
    """

    def __init__(self, critical: Sequence[Fraction]):
        self.critical = list(critical)
        self.values = with_midpoints(self.critical)
        self.pos = {v: k for k, v in enumerate(self.values)}
        G = len(self.values)
        ii, jj = np.indices((G, G))
        self.valid = (ii <= jj) & ~((ii == 0) & (jj == 0))
        self.shape = (G, G)

    @classmethod
    def for_sets(cls, *sets: IVFuzzySet, extra: Iterable[Fraction] = ()) -> "ThresholdGrid":
        vals = [v for A in sets for v in A.mu]
        return cls(critical_points(vals, extra))

    def index(self, x: Fraction) -> int:
        return self.pos[x]

    def rep_index(self, x: Fraction) -> int:
        """Grid position representing the cell that contains ``x``."""
        k = bisect.bisect_left(self.critical, x)
        if k < len(self.critical) and self.critical[k] == x:
            return 2 * k
        if k == 0 or k == len(self.critical):
            raise ValueError(f"{x} outside the grid range")
        return 2 * k - 1

    def point(self, i: int, j: int) -> IntervalValue:
        return IntervalValue(self.values[i], self.values[j])

    def points(self):
        G = len(self.values)
        for i in range(G):
            for j in range(i, G):
                if i or j:
                    yield i, j

    def relation_mask(self, mu: IntervalValue, rel: PointRelation,
                      semantics: Semantics) -> np.ndarray:
        """Boolean matrix of grid thresholds ``t`` with ``F(x;t) rel A`` when ``A(x)=mu``."""
        G = len(self.values)
        k = np.arange(G)
        lo, hi = self.pos[mu.lo], self.pos[mu.hi]
        clo, chi = self.pos[ONE - mu.lo], self.pos[ONE - mu.hi]
        in_lo, in_hi = k <= lo, k <= hi
        if semantics is Semantics.COMPONENTWISE:
            q_lo, q_hi = k > clo, k > chi
            if rel is PointRelation.IN:
                m = np.logical_and.outer(in_lo, in_hi)
            elif rel is PointRelation.Q:
                m = np.logical_and.outer(q_lo, q_hi)
            elif rel is PointRelation.IN_OR_Q:
                m = np.logical_and.outer(in_lo | q_lo, in_hi | q_hi)
            else:
                m = np.logical_and.outer(in_lo & q_lo, in_hi & q_hi)
        else:
            belongs = np.logical_and.outer(in_lo, in_hi)
            quasi = (np.logical_and.outer(k >= clo, k >= chi)
                     & ~np.logical_and.outer(k == clo, k == chi))
            if rel is PointRelation.IN:
                m = belongs
            elif rel is PointRelation.Q:
                m = quasi
            elif rel is PointRelation.IN_OR_Q:
                m = belongs | quasi
            else:
                m = belongs & quasi
        return m & self.valid


def _level_family(A: IVFuzzySet, grid: Sequence[IntervalValue]) -> frozenset:
    return frozenset(level_set(A, s) for s in grid)


def equivalent(A: IVFuzzySet, B: IVFuzzySet) -> bool:
    """Same family of level subsets, decided on the joint representative grid."""
    if A.size != B.size:
        raise CarrierMismatch("fuzzy sets live on different carriers")
    C = with_midpoints(critical_points(A.mu + B.mu))
    grid = [IntervalValue(a, b) for i, a in enumerate(C) for b in C[i:] if a or b]
    return _level_family(A, grid) == _level_family(B, grid)


def check_carrier(size: int, A: IVFuzzySet) -> None:
    if A.size != size:
        raise CarrierMismatch(f"fuzzy set has {A.size} elements, structure has {size}")


def parse_point(text: str, value: Optional[IntervalValue] = None) -> IVFuzzyPoint:
    return IVFuzzyPoint(int(text), value or TOP)
