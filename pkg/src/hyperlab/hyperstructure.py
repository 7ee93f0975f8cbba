"""Finite Krasner (m,n)-hyperrings: tables, axiom validation, hyperideals."""

from __future__ import annotations

import dataclasses
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from . import kernels

log = logging.getLogger(__name__)

DEFAULT_MAX_ATOMIC = 10**9
MAX_SIZE = 62  # outputs are stored as int64 bitmasks in the kernels


class HyperstructureError(ValueError):
    pass


class EmptyArgumentSet(HyperstructureError):
    pass


class ArityMismatch(HyperstructureError):
    pass


class NotValidated(HyperstructureError):
    pass


class EmptySubset(HyperstructureError):
    pass


class CarrierTooLarge(HyperstructureError):
    pass


class ValidationTooExpensive(HyperstructureError):
    pass


class AxiomFailure(HyperstructureError):
    def __init__(self, report: "AxiomReport"):
        failed = ", ".join(name for name, chk in report.checks.items() if not chk.verdict)
        super().__init__(f"Krasner axioms fail: {failed}")
        self.report = report


def max_atomic() -> int:
    raw = os.environ.get("HYPERLAB_MAX_ATOMIC")
    return int(raw) if raw else DEFAULT_MAX_ATOMIC


def _index(args: Sequence[int], size: int) -> int:
    idx = 0
    for a in args:
        idx = idx * size + a
    return idx


def _unindex(idx: int, size: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        idx, r = divmod(idx, size)
        out.append(r)
    return tuple(reversed(out))


def _mask(xs: Iterable[int]) -> int:
    out = 0
    for x in xs:
        out |= 1 << x
    return out


@dataclass(frozen=True, eq=False)
class KrasnerHyperring:
    """Dense tables of an m-ary hyperoperation ``f`` and an n-ary operation ``g``.

    ``f_table[i]`` is the output set of the i-th m-tuple in lexicographic
    order; ``g_table`` likewise holds single elements.  Build instances with
    :func:`make_hyperring` and promote them with :func:`validated`.
    """

    m: int
    n: int
    size: int
    f_table: tuple[frozenset, ...]
    g_table: tuple[int, ...]
    zero: int = 0
    name: str = "anonymous"
    is_validated: bool = False
    neutral: Optional[int] = None
    inverses: Optional[tuple[int, ...]] = None
    _ideal_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ArityMismatch("arities m and n must be at least 2")
        if not 1 <= self.size <= MAX_SIZE:
            raise CarrierTooLarge(f"carrier size must be in 1..{MAX_SIZE}")
        if len(self.f_table) != self.size ** self.m:
            raise HyperstructureError("f table is not total")
        if len(self.g_table) != self.size ** self.n:
            raise HyperstructureError("g table is not total")
        for out in self.f_table:
            if not out:
                raise HyperstructureError("f produced an empty set")
            if not all(0 <= x < self.size for x in out):
                raise HyperstructureError("f output out of range")
        if not all(0 <= x < self.size for x in self.g_table):
            raise HyperstructureError("g output out of range")
        if not 0 <= self.zero < self.size:
            raise HyperstructureError("zero out of range")

    @property
    def carrier(self) -> range:
        return range(self.size)

    def f(self, *args: int) -> frozenset:
        if len(args) != self.m:
            raise ArityMismatch(f"f expects {self.m} arguments, got {len(args)}")
        return self.f_table[_index(args, self.size)]

    def g(self, *args: int) -> int:
        if len(args) != self.n:
            raise ArityMismatch(f"g expects {self.n} arguments, got {len(args)}")
        return self.g_table[_index(args, self.size)]

    @cached_property
    def f_masks(self) -> tuple[int, ...]:
        return tuple(_mask(out) for out in self.f_table)

    def neg(self, a: int) -> int:
        return inverse(self, a)

    def __repr__(self) -> str:
        return f"KrasnerHyperring({self.name!r}, m={self.m}, n={self.n}, size={self.size})"


def make_hyperring(m: int, n: int, size: int, f, g, zero: int = 0,
                   name: str = "anonymous") -> KrasnerHyperring:
    """Tabulate callables ``f(*args) -> iterable`` and ``g(*args) -> int``."""
    f_table = tuple(frozenset(f(*args)) for args in product(range(size), repeat=m))
    g_table = tuple(int(g(*args)) for args in product(range(size), repeat=n))
    return KrasnerHyperring(m, n, size, f_table, g_table, zero, name)


def zmod(k: int, m: int = 2, n: int = 2) -> KrasnerHyperring:
    """Z_k as a degenerate hyperring: f is the singleton sum, g the product."""

    def f(*args):
        return {sum(args) % k}

    def g(*args):
        out = 1
        for a in args:
            out = out * a % k
        return out

    return make_hyperring(m, n, k, f, g, 0, f"zmod({k},{m},{n})")


def paper_24() -> KrasnerHyperring:
    """The four-element Krasner (2,4)-hyperring with B = {2,3} products."""
    A, B = {0, 1}, {2, 3}
    table = [
        [{0}, {1}, {2}, {3}],
        [{1}, A, {3}, B],
        [{2}, {3}, {0}, {1}],
        [{3}, B, {1}, A],
    ]

    def g(*args):
        return 2 if all(a in B for a in args) else 0

    return make_hyperring(2, 4, 4, lambda a, b: table[a][b], g, 0, "paper_24")


# ---------------------------------------------------------------- set algebra

def f_ext(R: KrasnerHyperring, sets: Sequence[Iterable[int]]) -> frozenset:
    sets = [frozenset(s) for s in sets]
    if len(sets) != R.m:
        raise ArityMismatch(f"f_ext expects {R.m} sets, got {len(sets)}")
    if any(not s for s in sets):
        raise EmptyArgumentSet("f_ext needs nonempty argument sets")
    for s in sets:
        if not all(0 <= x < R.size for x in s):
            raise HyperstructureError("argument set member out of range")
    out = set()
    for args in product(*[sorted(s) for s in sets]):
        out |= R.f(*args)
    return frozenset(out)


def f_iter(R: KrasnerHyperring, l: int, args: Sequence[int]) -> frozenset:
    """Left-nested ``f_(l)``: apply f to the first m arguments, then fold m-1 at a time."""
    if l < 1 or len(args) != l * (R.m - 1) + 1:
        raise ArityMismatch(f"f_({l}) takes {l * (R.m - 1) + 1} arguments, got {len(args)}")
    acc = R.f(*args[:R.m])
    pos = R.m
    for _ in range(l - 1):
        acc = f_ext(R, [acc] + [{x} for x in args[pos:pos + R.m - 1]])
        pos += R.m - 1
    return acc


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class AxiomCheck:
    verdict: bool
    counterexample: Optional[tuple] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "counterexample": list(self.counterexample) if self.counterexample else None,
                "detail": self.detail}


AXIOMS = ("commutativity", "associativity_f", "scalar_neutral", "inverses",
          "reversibility", "associativity_g", "distributivity", "zero_absorbing")


@dataclass(frozen=True)
class AxiomReport:
    checks: dict
    neutral: Optional[int] = None
    inverses: Optional[tuple[int, ...]] = None

    @property
    def ok(self) -> bool:
        return all(chk.verdict for chk in self.checks.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "neutral": self.neutral,
                "inverses": list(self.inverses) if self.inverses is not None else None,
                "axioms": {name: chk.to_json() for name, chk in self.checks.items()}}


def _passed(detail: str = "") -> AxiomCheck:
    return AxiomCheck(True, None, detail)


def _failed(ce: tuple, detail: str) -> AxiomCheck:
    return AxiomCheck(False, tuple(ce), detail)


def validation_cost(R: KrasnerHyperring) -> int:
    s, m, n = R.size, R.m, R.n
    return max(s ** (2 * m - 1) * m * m, s ** (2 * n - 1) * n, s ** (n - 1 + m) * n)


def _check_commutativity(R) -> AxiomCheck:
    for args in product(R.carrier, repeat=R.m):
        base = R.f(*args)
        for perm in set(permutations(args)):
            if R.f(*perm) != base:
                return _failed(args + perm, f"f{args} != f{perm}")
    return _passed()


def _check_assoc_f(R, backend) -> AxiomCheck:
    hit = backend.hyper_assoc_violation(R.f_masks, R.size, R.m)
    if hit is None:
        return _passed()
    idx, i, j = hit
    ce = _unindex(idx, R.size, 2 * R.m - 1)
    return _failed(ce, f"bracketing at positions {i + 1} and {j + 1} differ on {ce}")


def _find_neutral(R) -> tuple[list[int], dict]:
    found, misses = [], {}
    for e in R.carrier:
        bad = next((a for a in R.carrier if R.f(a, *[e] * (R.m - 1)) != {a}), None)
        if bad is None:
            found.append(e)
        else:
            misses[e] = bad
    return found, misses


def _check_neutral(R) -> tuple[AxiomCheck, Optional[int]]:
    found, misses = _find_neutral(R)
    if not found:
        return _failed((0, misses[0]), "no scalar neutral element; candidate 0 fails at the "
                       "given element"), None
    if len(found) > 1:
        return _failed(tuple(found[:2]), "scalar neutral element is not unique"), None
    e = found[0]
    if e != R.zero:
        return _failed((e, R.zero), "scalar neutral differs from the declared zero"), e
    return _passed(), e


def _check_inverses(R, e) -> tuple[AxiomCheck, Optional[tuple[int, ...]]]:
    if e is None:
        return _failed((R.zero,), "inverses undefined without a scalar neutral"), None
    inv = []
    for a in R.carrier:
        cands = [b for b in R.carrier if e in R.f(a, b, *[e] * (R.m - 2))]
        if len(cands) != 1:
            return _failed((a,) + tuple(cands[:2]),
                           f"element {a} has {len(cands)} inverse candidates"), None
        inv.append(cands[0])
    return _passed(), tuple(inv)


def _check_reversibility(R, inv) -> AxiomCheck:
    # Reading used: a in f(a_1..a_m) implies a_i in f(a, a_j^{-1} for j != i).
    if inv is None:
        return _failed((R.zero,), "reversibility undefined without unique inverses")
    for args in product(R.carrier, repeat=R.m):
        for a in sorted(R.f(*args)):
            for i in range(R.m):
                rest = [inv[x] for j, x in enumerate(args) if j != i]
                if args[i] not in R.f(a, *rest):
                    return _failed(args + (a, i),
                                   f"{a} in f{args} but argument {i + 1} not recoverable")
    return _passed()


def _check_assoc_g(R, backend) -> AxiomCheck:
    hit = backend.nary_assoc_violation(R.g_table, R.size, R.n)
    if hit is None:
        return _passed()
    idx, i, j = hit
    ce = _unindex(idx, R.size, 2 * R.n - 1)
    return _failed(ce, f"g bracketing at positions {i + 1} and {j + 1} differ on {ce}")


def _check_distributivity(R, backend) -> AxiomCheck:
    hit = backend.distributivity_violation(R.f_masks, R.g_table, R.size, R.m, R.n)
    if hit is None:
        return _passed()
    slot, xi, ai = hit
    xs = _unindex(xi, R.size, R.n - 1)
    a = _unindex(ai, R.size, R.m)
    return _failed((slot,) + xs + a,
                   f"slot {slot + 1}, other arguments {xs}, f-arguments {a}")


def _check_zero(R) -> AxiomCheck:
    z = R.zero
    for slot in range(R.n):
        for rest in product(R.carrier, repeat=R.n - 1):
            args = rest[:slot] + (z,) + rest[slot:]
            if R.g(*args) != z:
                return _failed(args, f"g{args} = {R.g(*args)} != {z}")
    return _passed()


def validate_krasner(R: KrasnerHyperring, *, require_commutative: bool = True,
                     override_cap: bool = False, backend=None) -> AxiomReport:
    """Exhaustively check the Krasner (m,n)-hyperring axioms.

    Failures are report entries; only an over-budget instance raises.
    """
    cost = validation_cost(R)
    if not override_cap and cost > max_atomic():
        raise ValidationTooExpensive(
            f"~{cost} lookups exceeds the cap {max_atomic()} (set HYPERLAB_MAX_ATOMIC)")
    backend = backend or kernels.backend
    checks = {}
    checks["commutativity"] = (_check_commutativity(R) if require_commutative
                               else _passed("not required"))
    checks["associativity_f"] = _check_assoc_f(R, backend)
    checks["scalar_neutral"], e = _check_neutral(R)
    checks["inverses"], inv = _check_inverses(R, e)
    checks["reversibility"] = _check_reversibility(R, inv)
    checks["associativity_g"] = _check_assoc_g(R, backend)
    checks["distributivity"] = _check_distributivity(R, backend)
    checks["zero_absorbing"] = _check_zero(R)
    return AxiomReport(checks, e, inv)


def validated(R: KrasnerHyperring, **kwargs) -> KrasnerHyperring:
    if R.is_validated:
        return R
    report = validate_krasner(R, **kwargs)
    if not report.ok:
        raise AxiomFailure(report)
    return dataclasses.replace(R, is_validated=True, neutral=report.neutral,
                               inverses=report.inverses, _ideal_cache={})


def inverse(R: KrasnerHyperring, a: int) -> int:
    if not R.is_validated or R.inverses is None:
        raise NotValidated("inverse() needs a validated structure")
    return R.inverses[a]


# ---------------------------------------------------------------- hyperideals

@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def _require_validated(R):
    if not R.is_validated:
        raise NotValidated("operation needs a validated structure; call validated(R)")


def is_hyperideal(R: KrasnerHyperring, S: Iterable[int]) -> IdealCheck:
    """Closure under f, inverses, neutral, solvability inside S, g-absorption."""
    _require_validated(R)
    S = frozenset(S)
    if not S:
        raise EmptySubset("hyperideals are nonempty")
    if not all(0 <= x < R.size for x in S):
        raise HyperstructureError("subset member out of range")
    cached = R._ideal_cache.get(S)
    if cached is not None:
        return cached
    result = _ideal_check(R, S)
    R._ideal_cache[S] = result
    return result


def _ideal_check(R, S) -> IdealCheck:
    members = sorted(S)
    for args in product(members, repeat=R.m):
        out = R.f(*args)
        if not out <= S:
            return IdealCheck(False, "not closed under f", args)
    for a in members:
        if R.inverses[a] not in S:
            return IdealCheck(False, "inverse missing", (a,))
    if R.neutral not in S:
        return IdealCheck(False, "neutral missing", (R.neutral,))
    for i in range(R.m):
        for others in product(members, repeat=R.m - 1):
            for b in members:
                if not any(b in R.f(*(others[:i] + (x,) + others[i:])) for x in members):
                    return IdealCheck(False, "equation not solvable in S",
                                      (i,) + others + (b,))
    for slot in range(R.n):
        for rest in product(R.carrier, repeat=R.n - 1):
            for s in members:
                args = rest[:slot] + (s,) + rest[slot:]
                if R.g(*args) not in S:
                    return IdealCheck(False, "not absorbing under g", args)
    return IdealCheck(True)


def ideal_closure(R: KrasnerHyperring, seeds: Iterable[int]) -> frozenset:
    """Smallest subset containing seeds and closed under the hyperideal operations."""
    _require_validated(R)
    S = set(seeds) | {R.neutral}
    while True:
        new = set(S)
        for args in product(sorted(S), repeat=R.m):
            new |= R.f(*args)
        new |= {R.inverses[a] for a in S}
        for slot in range(R.n):
            for rest in product(R.carrier, repeat=R.n - 1):
                for s in S:
                    new.add(R.g(*(rest[:slot] + (s,) + rest[slot:])))
        if new == S:
            return frozenset(S)
        S = new


class HyperidealFamily(list):
    """Sorted list of hyperideals; ``exhaustive`` is False for closure-generated results."""

    def __init__(self, items, exhaustive: bool):
        super().__init__(items)
        self.exhaustive = exhaustive


def canonical_key(S: Iterable[int]) -> tuple:
    S = sorted(S)
    return (len(S), tuple(S))


def enumerate_hyperideals(R: KrasnerHyperring, *, cap: int = 16,
                          closure_mode: bool = True) -> HyperidealFamily:
    _require_validated(R)
    if R.size <= cap:
        found = []
        for k in range(1, R.size + 1):
            for S in combinations(R.carrier, k):
                if is_hyperideal(R, S):
                    found.append(frozenset(S))
        return HyperidealFamily(sorted(found, key=canonical_key), exhaustive=True)
    if not closure_mode:
        raise CarrierTooLarge(f"size {R.size} above subset-enumeration cap {cap}")
    log.warning("carrier size %d above cap %d; generating hyperideals by closure, "
                "result may be incomplete", R.size, cap)
    found = {ideal_closure(R, [a]) for a in R.carrier}
    frontier = set(found)
    while frontier:
        fresh = set()
        for I in frontier:
            for J in list(found):
                K = ideal_closure(R, I | J)
                if K not in found:
                    fresh.add(K)
        found |= fresh
        frontier = fresh
    ideals = [S for S in found if is_hyperideal(R, S)]
    return HyperidealFamily(sorted(ideals, key=canonical_key), exhaustive=False)
