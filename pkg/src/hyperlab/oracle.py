"""Structure catalog, fuzzy-set corpora, a slow reference checker and theorem replays."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .classifiers import (FULL, LOWER, UPPER, AlphaBeta, ClassReport, Condition,
                          ThresholdPair, Variant, is_alpha_beta, is_in_invq_closed,
                          is_ordinary, is_threshold, level_criterion, upper_conditions, PASS)
from .hyperstructure import (EmptySubset, KrasnerHyperring, enumerate_hyperideals,
                             is_hyperideal, paper_24, validated, zmod)
from .implication import ImplicationOperator, is_t_implication_based
from .intervals import MID, IntervalValue, comparable, iv_new
from .ivfuzzy import IVFuzzySet, PointRelation, Semantics, characteristic, relation_holds


class MalformedCorpusSpec(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


class UnknownTheorem(KeyError):
    pass


# ---------------------------------------------------------------- catalog

CATALOG_BUILDERS: dict[str, Callable[[], KrasnerHyperring]] = {
    "paper_24": paper_24,
    "zmod(2,2,2)": lambda: zmod(2, 2, 2),
    "zmod(3,2,3)": lambda: zmod(3, 2, 3),
    "zmod(4,2,4)": lambda: zmod(4, 2, 4),
    "zmod(5,2,4)": lambda: zmod(5, 2, 4),
    "zmod(5,3,2)": lambda: zmod(5, 3, 2),
    "zmod(6,2,2)": lambda: zmod(6, 2, 2),
}


@lru_cache(maxsize=None)
def load_structure(name: str) -> KrasnerHyperring:
    """A validated catalog entry; ``zmod(k,m,n)`` names outside the table are built on demand."""
    if name in CATALOG_BUILDERS:
        return validated(CATALOG_BUILDERS[name]())
    if name.startswith("zmod(") and name.endswith(")"):
        try:
            k, m, n = (int(x) for x in name[5:-1].split(","))
        except ValueError:
            raise KeyError(name) from None
        return validated(zmod(k, m, n))
    raise KeyError(f"unknown structure {name!r}")


def catalog(names: Optional[Iterable[str]] = None) -> list[KrasnerHyperring]:
    return [load_structure(n) for n in (names or CATALOG_BUILDERS)]


# ---------------------------------------------------------------- corpus

@dataclass(frozen=True)
class Corpus:
    seed: int = 0
    q: int = 10
    count: int = 100
    chain_only: bool = False
    ideal_fraction: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.q < 2:
            raise MalformedCorpusSpec("grid denominator q must be at least 2")
        if self.count < 0:
            raise MalformedCorpusSpec("count must be nonnegative")
        if not 0 <= self.ideal_fraction <= 1:
            raise MalformedCorpusSpec("ideal_fraction must lie in [0, 1]")


def _random_value(rng: random.Random, q: int) -> IntervalValue:
    i, j = sorted((rng.randint(0, q), rng.randint(0, q)))
    return iv_new(Fraction(i, q), Fraction(j, q))


def random_chain(rng: random.Random, q: int, length: int) -> list[IntervalValue]:
    """An ascending chain in the grid: both endpoint sequences are sorted."""
    los = sorted(rng.randint(0, q) for _ in range(length))
    his = sorted(rng.randint(0, q) for _ in range(length))
    return [iv_new(Fraction(a, q), Fraction(max(a, b), q)) for a, b in zip(los, his)]


_FAMILIES: dict = {}


def _ideal_chain(rng: random.Random, R: KrasnerHyperring) -> list[frozenset]:
    key = (R.name, R.f_table, R.g_table)
    if key not in _FAMILIES:
        _FAMILIES[key] = sorted(enumerate_hyperideals(R), key=lambda s: (len(s), sorted(s)))
    family = _FAMILIES[key]
    chain: list[frozenset] = []
    for ideal in family:
        if (not chain or chain[-1] < ideal) and rng.random() < 0.6:
            chain.append(ideal)
    return chain or [family[0]]


def _structured(rng, R, q, palette) -> list[IntervalValue]:
    """Membership constant on the layers of a nested chain of hyperideals."""
    chain = _ideal_chain(rng, R)
    layers = len(chain) + 1
    if palette is None:
        values = random_chain(rng, q, layers)
    else:
        values = sorted((rng.choice(palette) for _ in range(layers)),
                        key=lambda v: (v.lo, v.hi))
    values.reverse()
    mu = []
    for x in R.carrier:
        depth = next((k for k, ideal in enumerate(chain) if x in ideal), len(chain))
        mu.append(values[depth])
    if rng.random() < 1 / 3:
        x = rng.randrange(R.size)
        mu[x] = rng.choice(palette) if palette is not None else _random_value(rng, q)
    return mu


def gen_fuzzy(R: KrasnerHyperring, corpus: Corpus) -> list[IVFuzzySet]:
    """Deterministic pseudo-random fuzzy sets on R's carrier.

    About ``ideal_fraction`` of the sets are built from a chain of hyperideals
    (so that the positive side of every classifier is exercised); the rest
    are uniform.  With ``chain_only`` every value comes from one chain.
    """
    rng = random.Random(f"{corpus.seed}:{R.name}:{corpus.q}:{int(corpus.chain_only)}")
    out = []
    for _ in range(corpus.count):
        palette = None
        if corpus.chain_only:
            palette = random_chain(rng, corpus.q, rng.randint(1, R.size + 1))
        if rng.random() < corpus.ideal_fraction:
            mu = _structured(rng, R, corpus.q, palette)
        elif palette is not None:
            mu = [rng.choice(palette) for _ in R.carrier]
        else:
            mu = [_random_value(rng, corpus.q) for _ in R.carrier]
        out.append(IVFuzzySet(tuple(mu)))
    return out


def is_chain_valued(A: IVFuzzySet) -> bool:
    vals = list(A.image())
    return all(comparable(x, y) for x in vals for y in vals)


# ---------------------------------------------------------------- slow oracle

SLOW_CAP = 10**8


def _slow_pairs(q: int):
    return [(i, j) for i in range(q + 1) for j in range(i, q + 1) if i or j]


def slow_alpha_beta(R: KrasnerHyperring, A: IVFuzzySet, ab: AlphaBeta, grid_q: int = 20,
                    semantics: Semantics = Semantics.COMPONENTWISE,
                    cap: int = SLOW_CAP) -> ClassReport:
    """Evaluate the quantified definition by enumerating grid thresholds.

    Each argument ranges over every pair ``[i/q, j/q]``; the set of
    effective thresholds is built by folding rmin (or rmax) over the
    arguments one at a time, so the work is a sequence of outer products
    rather than a full product of grids.
    """
    pairs = _slow_pairs(grid_q)
    P = len(pairs)
    arity = max(R.m, R.n)
    cost = (R.size ** R.m + R.size ** R.n) * P * P * arity
    if cost > cap:
        raise InstanceTooLarge(f"about {cost} atomic checks exceeds the cap {cap}")
    base = grid_q + 1
    plo = np.array([p[0] for p in pairs])
    phi = np.array([p[1] for p in pairs])
    thresholds = [iv_new(Fraction(i, grid_q), Fraction(j, grid_q)) for i, j in pairs]

    hyp_cache, concl_cache = {}, {}

    def hyp(v):
        if v not in hyp_cache:
            keep = [k for k, t in enumerate(thresholds)
                    if relation_holds(v, t, ab.alpha, semantics)]
            hyp_cache[v] = (plo[keep], phi[keep])
        return hyp_cache[v]

    def concl(v):
        if v not in concl_cache:
            table = np.zeros(base * base, dtype=bool)
            for (i, j), t in zip(pairs, thresholds):
                table[i * base + j] = relation_holds(v, t, ab.beta, semantics)
            concl_cache[v] = table
        return concl_cache[v]

    def fold(codes, h, op):
        lo = op.outer(codes // base, h[0]).ravel()
        hi = op.outer(codes % base, h[1]).ravel()
        return np.unique(lo * base + hi)

    all_cache, any_cache = {}, {}

    def reach_all(values):
        key = tuple(values)
        if key not in all_cache:
            h = hyp(values[-1])
            if len(values) == 1:
                all_cache[key] = np.unique(h[0] * base + h[1])
            else:
                all_cache[key] = fold(reach_all(values[:-1]), h, np.minimum)
        return all_cache[key]

    def reach_any(values):
        key = tuple(values)
        if key not in any_cache:
            h = hyp(values[-1])
            own = np.unique(h[0] * base + h[1])
            if len(values) == 1:
                any_cache[key] = own
            else:
                prev = reach_any(values[:-1])
                any_cache[key] = np.union1d(np.union1d(prev, own), fold(prev, h, np.maximum))
        return any_cache[key]

    def order(vals):
        return sorted(vals, key=lambda v: (v.lo, v.hi))

    def bad(codes, v):
        miss = codes[~concl(v)[codes]]
        return None if miss.size == 0 else int(miss.min())

    def report(cond, anchor, args, c, code):
        r = iv_new(Fraction(code // base, grid_q), Fraction(code % base, grid_q))
        return ClassReport(False, cond, anchor, {"tuple": args, "element": c, "threshold": r})

    for idx, args in enumerate(product(R.carrier, repeat=R.m)):
        codes = reach_all(order([A(a) for a in args]))
        for c in sorted(R.f_table[idx]):
            code = bad(codes, A(c))
            if code is not None:
                return report(Condition.SUM, "condition (1)", args, c, code)
    for b in R.carrier:
        nb = R.inverses[b]
        h = hyp(A(b))
        code = bad(np.unique(h[0] * base + h[1]), A(nb))
        if code is not None:
            return report(Condition.NEGATION, "condition (2)", (b,), nb, code)
    for idx, args in enumerate(product(R.carrier, repeat=R.n)):
        c = R.g_table[idx]
        code = bad(reach_any(order([A(a) for a in args])), A(c))
        if code is not None:
            return report(Condition.PRODUCT, "condition (3)", args, c, code)
    return PASS


# ---------------------------------------------------------------- theorem suite

IN_IN = AlphaBeta(PointRelation.IN, PointRelation.IN)
IN_INVQ = AlphaBeta(PointRelation.IN, PointRelation.IN_OR_Q)
INVQ_INVQ = AlphaBeta(PointRelation.IN_OR_Q, PointRelation.IN_OR_Q)
Q_INVQ = AlphaBeta(PointRelation.Q, PointRelation.IN_OR_Q)

CUSTOM_THRESHOLDS = (
    LOWER,
    FULL,
    UPPER,
    ThresholdPair(iv_new("1/5", "1/5"), iv_new("7/10", "7/10")),
    ThresholdPair(iv_new("1/10", "1/5"), iv_new("3/5", "4/5")),
)

IMPLICATION_PAIRS = (
    (ImplicationOperator.GAINES_RESCHER, FULL),
    (ImplicationOperator.GODEL, LOWER),
    (ImplicationOperator.CONTRAPOSITION_GODEL, UPPER),
)

THEOREMS = {
    "T1": "(in,in) implies (in,in-or-q)",
    "T2": "(in-or-q,in-or-q) implies (in,in-or-q)",
    "T3": "hyperideal implies its characteristic function is (in,in)",
    "T4": "hyperideal iff its characteristic function is (in,in-or-q)",
    "T5": "ordinary iff every level subset is a hyperideal",
    "T6": "(in,in-or-q) implies level subsets up to [0.5,0.5] are hyperideals",
    "T7": "level subsets above [0.5,0.5] are hyperideals iff the rmax conditions hold",
    "T8": "thresholds (s1,s2) iff level subsets in (s1,s2] are hyperideals",
    "T9": "implication-based hyperideals at [0.5,0.5] match threshold classes",
    "CF": "(in,in-or-q) iff the closed-form conditions hold",
}


@dataclass
class TheoremResult:
    theorem: str
    trials: int = 0
    failures: list = field(default_factory=list)
    total_failures: int = 0
    seed: Optional[int] = None
    variant: str = Variant.CORRECTED.value
    cap: int = 10

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def record(self, failure: dict) -> None:
        self.total_failures += 1
        if len(self.failures) < self.cap:
            self.failures.append(failure)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "trials": self.trials, "failures": self.failures,
                "total_failures": self.total_failures, "seed": self.seed,
                "variant": self.variant}


def _fuzzy_json(A: IVFuzzySet) -> dict:
    return {"size": A.size, "mu": [{"elem": x, "value": v.to_json()} for x, v in enumerate(A.mu)]}


def _compare(result, R, A, index, label, left: ClassReport, right: ClassReport,
             both_ways: bool):
    result.trials += 1
    if bool(left) and not bool(right):
        direction = "forward"
    elif both_ways and bool(right) and not bool(left):
        direction = "backward"
    else:
        return
    result.record({"structure": R.name, "index": index, "check": label,
                   "direction": direction, "fuzzy_set": _fuzzy_json(A),
                   "witness": (right if direction == "forward" else left).to_json()})


def _subset_trials(result, R, theorem, semantics):
    for bits in range(2 ** R.size):
        S = frozenset(x for x in R.carrier if bits >> x & 1)
        if theorem == "T4" and not S:
            continue
        try:
            ideal = bool(is_hyperideal(R, S))
        except EmptySubset:
            ideal = False
        chi = characteristic(S, R.size)
        ab = IN_IN if theorem == "T3" else IN_INVQ
        verdict = is_alpha_beta(R, chi, ab, semantics)
        ideal_report = PASS if ideal else ClassReport(False, None, "hyperideal",
                                                      {"subset": S})
        _compare(result, R, chi, bits, f"subset {sorted(S)}", ideal_report, verdict,
                 theorem == "T4")


def run_theorem(theorem: str, structures: Sequence[KrasnerHyperring], corpus: Corpus,
                variant: Variant = Variant.CORRECTED,
                semantics: Semantics = Semantics.COMPONENTWISE,
                cap: int = 10) -> TheoremResult:
    """Replay one theorem over every structure and corpus set, both ways for iffs."""
    if theorem not in THEOREMS:
        raise UnknownTheorem(theorem)
    result = TheoremResult(theorem, seed=corpus.seed, variant=variant.value, cap=cap)
    for R in structures:
        if theorem in ("T3", "T4"):
            _subset_trials(result, R, theorem, semantics)
            continue
        for i, A in enumerate(gen_fuzzy(R, corpus)):
            if theorem == "T1":
                _compare(result, R, A, i, "T1", is_alpha_beta(R, A, IN_IN, semantics),
                         is_alpha_beta(R, A, IN_INVQ, semantics), False)
            elif theorem == "T2":
                _compare(result, R, A, i, "T2", is_alpha_beta(R, A, INVQ_INVQ, semantics),
                         is_alpha_beta(R, A, IN_INVQ, semantics), False)
            elif theorem == "T5":
                _compare(result, R, A, i, "T5", is_ordinary(R, A),
                         level_criterion(R, A, FULL, semantics), True)
            elif theorem == "T6":
                _compare(result, R, A, i, "T6", is_alpha_beta(R, A, IN_INVQ, semantics),
                         level_criterion(R, A, LOWER, semantics), False)
            elif theorem == "T7":
                _compare(result, R, A, i, "T7", level_criterion(R, A, UPPER, semantics),
                         upper_conditions(R, A), True)
            elif theorem == "T8":
                for th in CUSTOM_THRESHOLDS:
                    label = f"T8 {th.s1!r}..{th.s2!r}"
                    _compare(result, R, A, i, label, is_threshold(R, A, th, variant),
                             level_criterion(R, A, th, semantics), True)
            elif theorem == "T9":
                for op, th in IMPLICATION_PAIRS:
                    _compare(result, R, A, i, f"T9 {op.value}",
                             is_t_implication_based(R, A, op, MID, semantics),
                             is_threshold(R, A, th, variant), True)
            elif theorem == "CF":
                _compare(result, R, A, i, "CF", is_alpha_beta(R, A, IN_INVQ, semantics),
                         is_in_invq_closed(R, A, variant), True)
    return result
