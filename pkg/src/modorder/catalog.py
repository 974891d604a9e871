"""Built-in instances, the JSON interchange format, and DOT export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import jsonschema
import numpy as np

from .algebra import (
    FiniteModule,
    FiniteRing,
    ScalarRing,
    direct_sum,
    pattern_matrix_ring,
    regular_representation,
    ring_zn,
    validate_module,
    validate_ring,
    zmodule,
)
from .errors import NotAPartialOrder, SchemaError, UnknownInstance
from .orders import PosetMatrix

FORMAT = 1


@dataclass(frozen=True)
class InstanceDescriptor:
    """Recipe for one catalog module.

    ``quoted`` holds named elements of interest (by display name) and
    ``pairs`` the relation instances the instance is meant to exhibit.
    """

    name: str
    recipe: str
    params: dict[str, Any]
    note: str = ""
    quoted: dict[str, str] = field(default_factory=dict)
    pairs: tuple[tuple[str, str], ...] = ()


def _entry_set(n: int, spec: str) -> list[int]:
    # "*" = whole base ring, "0" = {0}, "d" = multiples of d
    if spec == "*":
        return list(range(n))
    d = int(spec)
    if d == 0:
        return [0]
    return sorted({(d * k) % n for k in range(n)})


def build_ring(params: dict[str, Any]) -> FiniteRing:
    recipe = params["recipe"]
    if recipe == "zn":
        return ring_zn(int(params["n"]))
    if recipe == "pattern-matrix":
        n = int(params["base"])
        entries = [[_entry_set(n, s) for s in row] for row in params["entries"]]
        return pattern_matrix_ring(ring_zn(n), int(params["k"]), entries)
    raise UnknownInstance(f"unknown ring recipe {recipe!r}")


def build_module(recipe: str, params: dict[str, Any]) -> FiniteModule:
    if recipe == "zmodule":
        return zmodule(params["orders"])
    if recipe == "zn":
        return regular_representation(ring_zn(int(params["n"])))
    if recipe == "regular-representation":
        return regular_representation(build_ring(params["ring"]))
    if recipe == "product":
        parts = [build_module(p["recipe"], p["params"]) for p in params["factors"]]
        out = parts[0]
        for p in parts[1:]:
            out = direct_sum(out, p)
        return out
    raise UnknownInstance(f"unknown module recipe {recipe!r}")


def _pattern(base: int, entries) -> dict[str, Any]:
    return {"ring": {"recipe": "pattern-matrix", "base": base, "k": len(entries), "entries": entries}}


FULL2 = [["*", "*"], ["*", "*"]]

_CATALOG = (
    InstanceDescriptor(
        "zmod12",
        "zmodule",
        {"orders": [12]},
        "Z_12 over the integers; non-regular, zero dual",
        {"m1": "6", "m2": "2", "f": "*3", "a": "3"},
        (("6", "2"), ("6", "6")),
    ),
    InstanceDescriptor("zmod4", "zmodule", {"orders": [4]}, "audit instance for integer multiples"),
    InstanceDescriptor("zmod6", "zmodule", {"orders": [6]}, "Z_6 over the integers"),
    InstanceDescriptor("zmod2x4", "zmodule", {"orders": [2, 4]}, "Z_2 x Z_4 over the integers"),
    InstanceDescriptor(
        "ex3.7-z2",
        "regular-representation",
        _pattern(2, [["*", "0", "*"], ["0", "*", "*"], ["0", "0", "*"]]),
        "triangular pattern subring of U_3(Z_2) over itself",
        {"m1": "[[0,0,1],[0,0,1],[0,0,0]]", "m2": "[[0,0,1],[0,1,1],[0,0,0]]"},
        (("[[0,0,1],[0,0,1],[0,0,0]]", "[[0,0,1],[0,1,1],[0,0,0]]"),),
    ),
    InstanceDescriptor(
        "ex3.9-z8",
        "regular-representation",
        _pattern(8, [["*", "2"], ["2", "*"]]),
        "mod-8 proxy of the pattern ring [[Z,2Z],[2Z,Z]] over itself",
        {"m1": "[[1,6],[6,3]]", "m2": "[[1,2],[2,1]]", "a": "[[1,0],[4,3]]", "f": "[[1,4],[0,3]]"},
        (("[[1,6],[6,3]]", "[[1,2],[2,1]]"),),
    ),
    InstanceDescriptor(
        "u2z6",
        "regular-representation",
        _pattern(6, [["*", "*"], ["0", "*"]]),
        "upper triangular U_2(Z_6) over itself; proxy for the Z/Z_6 triangular ring",
        {
            "m1": "[[2,2],[0,3]]",
            "m2": "[[2,0],[0,1]]",
            "a": "[[1,1],[0,3]]",
            "f": "[[1,2],[0,3]]",
            "g": "[[2,0],[0,3]]",
        },
        (("[[2,2],[0,3]]", "[[2,0],[0,1]]"), ("[[4,4],[0,3]]", "[[4,0],[0,3]]")),
    ),
    InstanceDescriptor(
        "m2z5",
        "regular-representation",
        _pattern(5, FULL2),
        "M_2(Z_5) over itself; proxy for M_2(Z)",
        {"m1": "[[3,0],[0,3]]", "m2": "[[4,2],[2,4]]", "a": "[[1,2],[2,1]]", "f": "[[1,2],[2,1]]"},
        (("[[3,0],[0,3]]", "[[4,2],[2,4]]"),),
    ),
    InstanceDescriptor(
        "m2z7",
        "regular-representation",
        _pattern(7, FULL2),
        "M_2(Z_7) over itself; proxy for M_2(Q)",
        {"m1": "[[2,5],[0,0]]", "m2": "[[1,5],[1,0]]", "f": "[[1,1],[0,0]]", "a": "[[0,0],[6,1]]"},
        (("[[2,5],[0,0]]", "[[1,5],[1,0]]"), ("[[2,5],[0,0]]", "[[2,3],[2,0]]")),
    ),
    InstanceDescriptor("m2z2", "regular-representation", _pattern(2, FULL2), "M_2(Z_2) over itself; regular"),
    InstanceDescriptor("z6", "zn", {"n": 6}, "Z_6 over itself; regular"),
    InstanceDescriptor("zero", "zmodule", {"orders": [1]}, "the zero module"),
)


def builtin_catalog() -> list[InstanceDescriptor]:
    return list(_CATALOG)


def catalog_names() -> list[str]:
    return [d.name for d in _CATALOG]


def descriptor(name: str) -> InstanceDescriptor:
    for d in _CATALOG:
        if d.name == name:
            return d
    raise UnknownInstance(f"no built-in instance named {name!r}")


def build(d: InstanceDescriptor) -> FiniteModule:
    return build_module(d.recipe, d.params)


@lru_cache(maxsize=None)
def builtin(name: str) -> FiniteModule:
    return build(descriptor(name))


# --- JSON ------------------------------------------------------------------

_TABLE = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
_NAMES = {"type": "array", "items": {"type": "string"}, "minItems": 1}

SCHEMA = {
    "type": "object",
    "required": ["format", "scalars", "elements", "add", "action"],
    "properties": {
        "format": {"const": FORMAT},
        "name": {"type": "string"},
        "scalars": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind", "elements", "add", "mul", "zero", "one"],
                    "properties": {
                        "kind": {"const": "table"},
                        "elements": _NAMES,
                        "add": _TABLE,
                        "mul": _TABLE,
                        "zero": {"type": "integer", "minimum": 0},
                        "one": {"type": "integer", "minimum": 0},
                    },
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "exponent"],
                    "properties": {
                        "kind": {"const": "integers"},
                        "exponent": {"type": "integer", "minimum": 1},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "elements": _NAMES,
        "add": _TABLE,
        "action": _TABLE,
    },
    "additionalProperties": False,
}


def _schema_check(doc: Any) -> None:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        if err.context:
            # oneOf: report the branch whose kind matched, else the deepest error
            err = max(err.context, key=lambda e: len(e.absolute_path))
        raise SchemaError(err.json_path, err.message)


def load_instance(doc: dict[str, Any]) -> FiniteModule:
    """Validate a JSON document and build the module it describes."""
    _schema_check(doc)
    sc = doc["scalars"]
    if sc["kind"] == "integers":
        scalars = ScalarRing.integers(sc["exponent"])
    else:
        ring = validate_ring(sc["elements"], sc["add"], sc["mul"], sc["zero"], sc["one"])
        scalars = ScalarRing.table(ring)
    return validate_module(scalars, doc["elements"], doc["add"], doc["action"])


def save_instance(M: FiniteModule, name: str | None = None) -> dict[str, Any]:
    if M.scalars.is_integers:
        sc: dict[str, Any] = {"kind": "integers", "exponent": M.scalars.exponent}
    else:
        R = M.scalars.ring
        sc = {
            "kind": "table",
            "elements": list(R.elements),
            "add": R.add.tolist(),
            "mul": R.mul.tolist(),
            "zero": R.zero,
            "one": R.one,
        }
    doc: dict[str, Any] = {"format": FORMAT}
    if name is not None:
        doc["name"] = name
    doc.update(
        {
            "scalars": sc,
            "elements": list(M.elements),
            "add": M.add.tolist(),
            "action": M.action.tolist(),
        }
    )
    return doc


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def load_path(path: str) -> FiniteModule:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc.msg}") from exc
    return load_instance(doc)


# --- DOT -------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(P: PosetMatrix, title: str | None = None) -> str:
    """Hasse diagram as DOT; edges run from lower to upper element."""
    if not P.axioms.is_partial_order:
        raise NotAPartialOrder(P.axioms.failure() or "not a partial order")
    M = P.module
    maximal = set(P.maximal or ())
    lines = [f"digraph {_dot_quote(title or P.relation)} {{", "  rankdir=BT;"]
    for i, name in enumerate(M.elements):
        style = ", shape=doublecircle" if i in maximal else ""
        lines.append(f"  n{i} [label={_dot_quote(name)}{style}];")
    for lo, hi in P.hasse or ():
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_to_json(P: PosetMatrix) -> dict[str, Any]:
    M = P.module
    ax = P.axioms
    return {
        "relation": P.relation,
        "elements": list(M.elements),
        "bits": P.bits.astype(np.uint8).tolist(),
        "axioms": {
            "reflexive": ax.reflexive,
            "antisymmetric": list(ax.antisymmetric) if ax.antisymmetric else None,
            "transitive": list(ax.transitive) if ax.transitive else None,
        },
        "hasse": [list(e) for e in P.hasse] if P.hasse is not None else None,
        "maximal": list(P.maximal) if P.maximal is not None else None,
    }
