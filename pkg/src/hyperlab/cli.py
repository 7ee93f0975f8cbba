"""Command line front end: ``hyperlab validate|ideals|classify|levels|verify|gen``.

Exit status is 0 when the verdict holds (or every theorem passes), 1 when a
counterexample was found, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .classifiers import (NAMED_RANGES, AlphaBeta, MalformedThresholds, ThresholdPair,
                          UnsupportedAlpha, Variant, is_alpha_beta, is_in_invq_closed,
                          is_ordinary, is_threshold, level_criterion)
from .formats import FormatError, fuzzy_to_json, load_fuzzy_file, load_structure_file
from .hyperstructure import (AxiomFailure, HyperstructureError, enumerate_hyperideals,
                             validate_krasner, validated)
from .implication import ImplicationOperator, is_t_implication_based
from .intervals import IntervalValue, MalformedInterval, format_rational
from .ivfuzzy import CarrierMismatch, PointRelation, Semantics, ThresholdGrid, level_set
from .oracle import (CATALOG_BUILDERS, THEOREMS, Corpus, MalformedCorpusSpec, UnknownTheorem,
                     catalog, gen_fuzzy, load_structure, run_theorem)

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _structure(spec: str, validate: bool = True):
    """A catalog name such as ``paper_24`` or a path to a structure file."""
    if not Path(spec).exists():
        try:
            return load_structure(spec)
        except KeyError:
            raise InputError(f"{spec}: no such file or catalog structure") from None
    R = load_structure_file(spec)
    if not validate:
        return R
    try:
        return validated(R)
    except AxiomFailure as exc:
        bad = [k for k, v in exc.report.checks.items() if not v.verdict]
        raise InputError(f"{spec}: not a Krasner hyperring (fails {', '.join(bad)})") from None


def _variant(text: str) -> Variant:
    key = text.replace("-", "").replace("_", "").lower()
    for v in Variant:
        if v.value.lower() == key:
            return v
    raise InputError(f"unknown variant {text!r}")


def _semantics(text: str) -> Semantics:
    try:
        return Semantics(text)
    except ValueError:
        raise InputError(f"unknown semantics {text!r}") from None


def _thresholds(args) -> ThresholdPair:
    if args.s1 is None or args.s2 is None:
        raise InputError("threshold checks need --s1 and --s2")
    return ThresholdPair(IntervalValue.parse(args.s1), IntervalValue.parse(args.s2))


# ---------------------------------------------------------------- commands

def cmd_validate(args) -> int:
    R = _structure(args.structure, validate=False)
    report = validate_krasner(R, override_cap=args.force)
    lines = [f"{R.name}: m={R.m} n={R.n} size={R.size} (kernels: {kernels.IMPLEMENTATION})"]
    for name, chk in report.checks.items():
        status = "ok" if chk.verdict else f"FAIL at {list(chk.counterexample or ())}"
        lines.append(f"  {name:<16} {status}" + (f"  {chk.detail}" if chk.detail else ""))
    lines.append("Krasner hyperring" if report.ok else "not a Krasner hyperring")
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_ideals(args) -> int:
    R = _structure(args.structure)
    family = enumerate_hyperideals(R, cap=args.cap)
    payload = {"structure": R.name, "exhaustive": family.exhaustive,
               "hyperideals": [sorted(S) for S in family]}
    text = "\n".join("{" + ", ".join(map(str, sorted(S))) + "}" for S in family)
    if not family.exhaustive:
        text += "\n(closure-generated, may be incomplete)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    R = _structure(args.structure)
    A = load_fuzzy_file(args.fuzzy)
    variant = _variant(args.variant)
    semantics = _semantics(args.semantics)
    kind = args.kind
    if kind == "ordinary":
        report = is_ordinary(R, A)
    elif kind == "alphabeta":
        ab = AlphaBeta(PointRelation.parse(args.alpha), PointRelation.parse(args.beta))
        report = is_alpha_beta(R, A, ab, semantics)
    elif kind == "invq":
        report = is_in_invq_closed(R, A, variant)
    elif kind == "threshold":
        report = is_threshold(R, A, _thresholds(args), variant)
    else:
        op = ImplicationOperator.parse(args.op)
        report = is_t_implication_based(R, A, op, IntervalValue.parse(args.t), semantics)
    payload = {"kind": kind, "structure": R.name, **report.to_json()}
    _emit(args, payload, f"{kind}: {report.describe()}")
    return EXIT_OK if report else EXIT_FALSE


def cmd_levels(args) -> int:
    R = _structure(args.structure)
    A = load_fuzzy_file(args.fuzzy)
    if args.s1 is not None or args.s2 is not None:
        rng = _thresholds(args)
    else:
        rng = NAMED_RANGES[args.range]
    semantics = _semantics(args.semantics)
    grid = ThresholdGrid.for_sets(A)
    table = {}
    for i, j in grid.points():
        s = grid.point(i, j)
        table.setdefault(tuple(sorted(level_set(A, s))), s)
    report = level_criterion(R, A, rng, semantics)
    payload = {"structure": R.name, "range": rng.to_json(),
               "levels": [{"subset": list(S), "first_threshold": s.to_json()}
                          for S, s in sorted(table.items(), key=lambda kv: (len(kv[0]), kv[0]))],
               **report.to_json()}
    lines = [f"{{{', '.join(map(str, S))}}}  from {s!r}" for S, s in
             sorted(table.items(), key=lambda kv: (len(kv[0]), kv[0]))]
    lines.append(f"level criterion: {report.describe()}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report else EXIT_FALSE


def cmd_verify(args) -> int:
    names = list(THEOREMS) if args.theorems == "all" else [
        t.strip().upper() for t in args.theorems.split(",") if t.strip()]
    if args.theorems == "all":
        names.remove("CF")
    structures = catalog(args.structures.split("+") if args.structures else None)
    corpus = Corpus(seed=args.seed, q=args.q, count=args.count, chain_only=args.chain_only)
    variant = _variant(args.variant)
    semantics = _semantics(args.semantics)
    results = [run_theorem(t, structures, corpus, variant, semantics) for t in names]
    failed = any(not r.passed for r in results)
    lines = []
    for r in results:
        status = "pass" if r.passed else f"FAIL ({r.total_failures} failures)"
        lines.append(f"{r.theorem}: {status} over {r.trials} trials")
        for f in r.failures:
            lines.append(f"    {f['structure']} #{f['index']} {f['check']} {f['direction']}: "
                         f"{f['witness'].get('anchor') or ''} {json.dumps(f['witness']['witness'])}")
    _emit(args, {"results": [r.to_json() for r in results], "ok": not failed}, "\n".join(lines))
    return EXIT_FALSE if failed else EXIT_OK


def cmd_gen(args) -> int:
    R = _structure(args.structure)
    corpus = Corpus(seed=args.seed, q=args.q, count=args.count, chain_only=args.chain_only)
    sets = [fuzzy_to_json(A) for A in gen_fuzzy(R, corpus)]
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, doc in enumerate(sets):
            (out / f"fuzzy_{k:04d}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print(f"wrote {len(sets)} fuzzy sets to {out}")
        return EXIT_OK
    if args.json:
        print(json.dumps(sets, indent=2))
    else:
        for doc in sets:
            print(" ".join(f"{row['elem']}:[{row['value'][0]},{row['value'][1]}]"
                           for row in doc["mu"]))
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlab",
                                     description="Krasner hyperrings and interval-valued "
                                                 "fuzzy hyperideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    structure_help = "structure file or catalog name (" + ", ".join(CATALOG_BUILDERS) + ")"

    p = sub.add_parser("validate", parents=[common], help="check the hyperring axioms")
    p.add_argument("structure", help=structure_help)
    p.add_argument("--force", action="store_true", help="ignore HYPERLAB_MAX_ATOMIC")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ideals", parents=[common], help="list all hyperideals")
    p.add_argument("structure", help=structure_help)
    p.add_argument("--cap", type=int, default=16, help="largest carrier for subset search")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("classify", parents=[common], help="classify a fuzzy set")
    p.add_argument("structure", help=structure_help)
    p.add_argument("fuzzy", help="fuzzy-set JSON file")
    p.add_argument("--kind", required=True,
                   choices=["ordinary", "alphabeta", "invq", "threshold", "implication"])
    p.add_argument("--alpha", default="in")
    p.add_argument("--beta", default="invq")
    p.add_argument("--s1", help="lower threshold, e.g. 0/1,0/1")
    p.add_argument("--s2", help="upper threshold, e.g. 1/2,1/2")
    p.add_argument("--op", default="Ig", help="Im, Ia, Ig, Icg, Igr, Ib or Igg")
    p.add_argument("--t", default="1/2,1/2", help="truth level for implication checks")
    p.add_argument("--variant", default="corrected", help="corrected or paper-literal")
    p.add_argument("--semantics", default="componentwise",
                   choices=[s.value for s in Semantics])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("levels", parents=[common], help="tabulate level subsets")
    p.add_argument("structure", help=structure_help)
    p.add_argument("fuzzy", help="fuzzy-set JSON file")
    p.add_argument("--range", default="full", choices=sorted(NAMED_RANGES))
    p.add_argument("--s1")
    p.add_argument("--s2")
    p.add_argument("--semantics", default="componentwise",
                   choices=[s.value for s in Semantics])
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("verify", parents=[common], help="replay the theorem suite")
    p.add_argument("--theorems", default="all", help="comma list such as T1,T5 or 'all'")
    p.add_argument("--structures", help="catalog names joined by '+' (default: all)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--q", type=int, default=10)
    p.add_argument("--chain-only", action="store_true")
    p.add_argument("--variant", default="corrected")
    p.add_argument("--semantics", default="componentwise",
                   choices=[s.value for s in Semantics])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate a fuzzy-set corpus")
    p.add_argument("structure", help=structure_help)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--q", type=int, default=10)
    p.add_argument("--chain-only", action="store_true")
    p.add_argument("--out", help="directory for one JSON file per set")
    p.set_defaults(func=cmd_gen)
    return parser


INPUT_ERRORS = (InputError, FormatError, MalformedInterval, MalformedThresholds,
                UnsupportedAlpha, CarrierMismatch, MalformedCorpusSpec, UnknownTheorem,
                HyperstructureError, OSError, ValueError)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hyperlab: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
