"""Exact interval numbers on [0, 1] and their lattice operations.

Endpoints are :class:`fractions.Fraction` values, so every comparison is
exact.  An :class:`IntervalValue` ``[lo, hi]`` is ordered componentwise;
``rmin``/``rmax`` are the lattice meet and join.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class MalformedInterval(ValueError):
    pass


class EmptyCollection(ValueError):
    pass


class ScalarOutOfRange(ValueError):
    pass


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class SumConvention(enum.Enum):
    """How ``x + y > [1,1]`` is decided.

    ``PAPER_ORDER`` uses ``>`` as "``>=`` componentwise and not equal";
    ``STRICT_BOTH`` requires both component sums to exceed 1.
    """

    PAPER_ORDER = "paper-order"
    STRICT_BOTH = "strict-both"


def rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"`` (or an integer) into a reduced Fraction.

    Floats and decimal strings are rejected on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise ValueError(f"not a rational of the form p/q: {value!r}")
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=False)
class IntervalValue:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = rational(self.lo), rational(self.hi)
        if not (ZERO <= lo <= hi <= ONE):
            raise MalformedInterval(f"[{lo}, {hi}] is not a subinterval of [0,1]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __le__(self, other: "IntervalValue") -> bool:
        return self.lo <= other.lo and self.hi <= other.hi

    def __ge__(self, other: "IntervalValue") -> bool:
        return other <= self

    def __lt__(self, other: "IntervalValue") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "IntervalValue") -> bool:
        return other < self

    def is_zero(self) -> bool:
        return self.hi == 0

    def to_json(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]

    @classmethod
    def from_json(cls, pair) -> "IntervalValue":
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise MalformedInterval(f"interval must be a two-element array: {pair!r}")
        return cls(rational(pair[0]), rational(pair[1]))

    @classmethod
    def parse(cls, text: str) -> "IntervalValue":
        """Parse the CLI syntax ``"p/q,r/s"``; a single rational gives ``[x,x]``."""
        parts = text.split(",")
        if len(parts) == 1:
            x = rational(parts[0])
            return cls(x, x)
        if len(parts) != 2:
            raise MalformedInterval(f"expected 'p/q,r/s': {text!r}")
        return cls(rational(parts[0]), rational(parts[1]))

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def iv_new(lo: RationalLike, hi: RationalLike) -> IntervalValue:
    return IntervalValue(rational(lo), rational(hi))


def iv_const(x: RationalLike) -> IntervalValue:
    x = rational(x)
    return IntervalValue(x, x)


BOTTOM = IntervalValue(ZERO, ZERO)
TOP = IntervalValue(ONE, ONE)
MID = IntervalValue(HALF, HALF)


def iv_cmp(x: IntervalValue, y: IntervalValue) -> Ordering:
    if x == y:
        return Ordering.EQUAL
    if x <= y:
        return Ordering.LESS
    if y <= x:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def comparable(x: IntervalValue, y: IntervalValue) -> bool:
    return iv_cmp(x, y) is not Ordering.INCOMPARABLE


def _meet(x: IntervalValue, y: IntervalValue) -> IntervalValue:
    return IntervalValue(min(x.lo, y.lo), min(x.hi, y.hi))


def _join(x: IntervalValue, y: IntervalValue) -> IntervalValue:
    return IntervalValue(max(x.lo, y.lo), max(x.hi, y.hi))


def rmin(xs: Iterable[IntervalValue]) -> IntervalValue:
    xs = list(xs)
    if not xs:
        raise EmptyCollection("rmin of an empty collection")
    return reduce(_meet, xs)


def rmax(xs: Iterable[IntervalValue]) -> IntervalValue:
    xs = list(xs)
    if not xs:
        raise EmptyCollection("rmax of an empty collection")
    return reduce(_join, xs)


def rinf(xs: Iterable[IntervalValue]) -> IntervalValue:
    # computed endpoint by endpoint rather than by folding rmin, so the two
    # routes stay independent in tests
    xs = list(xs)
    if not xs:
        raise EmptyCollection("rinf of an empty collection")
    return IntervalValue(min(x.lo for x in xs), min(x.hi for x in xs))


def rsup(xs: Iterable[IntervalValue]) -> IntervalValue:
    xs = list(xs)
    if not xs:
        raise EmptyCollection("rsup of an empty collection")
    return IntervalValue(max(x.lo for x in xs), max(x.hi for x in xs))


def iv_scale(k: RationalLike, x: IntervalValue) -> IntervalValue:
    k = rational(k)
    if not ZERO <= k <= ONE:
        raise ScalarOutOfRange(f"scale factor {k} outside [0,1]")
    return IntervalValue(k * x.lo, k * x.hi)


def sum_exceeds_one(lo_sum: Fraction, hi_sum: Fraction,
                    convention: SumConvention = SumConvention.PAPER_ORDER) -> bool:
    """Decide ``(lo_sum, hi_sum) > [1,1]`` for an unclamped endpoint pair."""
    if convention is SumConvention.STRICT_BOTH:
        return lo_sum > ONE and hi_sum > ONE
    return lo_sum >= ONE and hi_sum >= ONE and not (lo_sum == ONE and hi_sum == ONE)


def iv_sum_exceeds_one(x: IntervalValue, y: IntervalValue,
                       convention: SumConvention = SumConvention.PAPER_ORDER) -> bool:
    return sum_exceeds_one(x.lo + y.lo, x.hi + y.hi, convention)
