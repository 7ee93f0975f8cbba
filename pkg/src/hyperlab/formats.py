"""JSON files for structures and fuzzy sets.

Structure file::

    {"m": 2, "n": 4, "size": 4, "zero": 0, "name": "...",
     "f": [{"args": [1, 1], "out": [0, 1]}, ...]   or {"default": [..], "exceptions": [...]},
     "g": {"default": 0, "exceptions": [{"args": [2, 2, 2, 2], "out": 2}, ...]}}

Entries given for one argument order are copied to every permutation
(both operations are required to be commutative), unless ``"orbits": false``.
"""

from __future__ import annotations

import json
from importlib import resources
from itertools import permutations, product
from pathlib import Path

from .hyperstructure import KrasnerHyperring, _index
from .intervals import IntervalValue
from .ivfuzzy import IVFuzzySet


class FormatError(ValueError):
    pass


def _entries(spec, arity, size, single, name, orbits):
    table = {}
    default = None
    if isinstance(spec, dict):
        default = spec.get("default")
        rows = spec.get("exceptions", [])
    elif isinstance(spec, list):
        rows = spec
    else:
        raise FormatError(f"{name}: expected a list or an object")
    for row in rows:
        try:
            args, out = tuple(int(a) for a in row["args"]), row["out"]
        except (KeyError, TypeError, ValueError):
            raise FormatError(f"{name}: malformed entry {row!r}") from None
        if len(args) != arity:
            raise FormatError(f"{name}: entry {list(args)} has the wrong arity")
        if not all(0 <= a < size for a in args):
            raise FormatError(f"{name}: argument out of range in {list(args)}")
        value = int(out) if single else frozenset(int(x) for x in out)
        keys = set(permutations(args)) if orbits else {args}
        for key in keys:
            if key in table and table[key] != value:
                raise FormatError(f"{name}: conflicting entries for {list(key)}")
            table[key] = value
    if default is not None:
        default = int(default) if single else frozenset(int(x) for x in default)
    out = []
    for args in product(range(size), repeat=arity):
        if args in table:
            out.append(table[args])
        elif default is not None:
            out.append(default)
        else:
            raise FormatError(f"{name}: no entry for {list(args)} and no default")
    return tuple(out)


def structure_from_json(data: dict) -> KrasnerHyperring:
    try:
        m, n, size = int(data["m"]), int(data["n"]), int(data["size"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("structure needs integer m, n and size") from None
    orbits = bool(data.get("orbits", True))
    f_table = _entries(data.get("f"), m, size, False, "f", orbits)
    g_table = _entries(data.get("g"), n, size, True, "g", orbits)
    return KrasnerHyperring(m, n, size, f_table, g_table, int(data.get("zero", 0)),
                            str(data.get("name", "anonymous")))


def structure_to_json(R: KrasnerHyperring) -> dict:
    f_rows = [{"args": list(args), "out": sorted(R.f_table[_index(args, R.size)])}
              for args in product(R.carrier, repeat=R.m)]
    g_rows = [{"args": list(args), "out": R.g_table[_index(args, R.size)]}
              for args in product(R.carrier, repeat=R.n)
              if R.g_table[_index(args, R.size)] != R.zero]
    return {"name": R.name, "m": R.m, "n": R.n, "size": R.size, "zero": R.zero,
            "orbits": False, "f": f_rows, "g": {"default": R.zero, "exceptions": g_rows}}


def fuzzy_from_json(data: dict) -> IVFuzzySet:
    try:
        size = int(data["size"])
        rows = data.get("mu", [])
    except (KeyError, TypeError, ValueError):
        raise FormatError("fuzzy set needs an integer size and a mu list") from None
    values = {}
    for row in rows:
        try:
            x = int(row["elem"])
            v = IntervalValue.from_json(row["value"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed membership entry {row!r}") from exc
        if not 0 <= x < size:
            raise FormatError(f"element {x} outside carrier of size {size}")
        if x in values:
            raise FormatError(f"element {x} listed twice")
        values[x] = v
    return IVFuzzySet.from_mapping(size, values)


def fuzzy_to_json(A: IVFuzzySet) -> dict:
    return {"size": A.size,
            "mu": [{"elem": x, "value": v.to_json()} for x, v in enumerate(A.mu)]}


def _read(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from None


def load_structure_file(path) -> KrasnerHyperring:
    return structure_from_json(_read(path))


def load_fuzzy_file(path) -> IVFuzzySet:
    return fuzzy_from_json(_read(path))


def bundled(name: str) -> dict:
    """A JSON document shipped in ``hyperlab/data``."""
    return json.loads(resources.files("hyperlab").joinpath("data").joinpath(name).read_text())
