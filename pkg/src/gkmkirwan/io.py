"""JSON documents for spaces (``schema: 1``).

A document looks like::

    {
      "schema": 1,
      "name": "cp1",
      "rank": 1,
      "variables": ["x1"],
      "complex_dim": 1,
      "fixed_points": [
        {"name": "p0", "moment": ["0"], "weights": [[1]]},
        {"name": "p1", "moment": ["1"], "weights": [[-1]]}
      ],
      "edges": [{"from": "p0", "to": "p1", "weight": [1]}]
    }

Moment coordinates are strings ``"p/q"`` so that no value ever passes through
a float.  Two optional members carry derived structure: ``lift`` (a nested
document for a larger torus plus the integer ``inclusion`` matrix) and
``factors`` (the two factors of a product, the dilation and the point pairs,
which enables the Kunneth constructor on a loaded space).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema

from .catalog import builtin
from .linalg import format_fraction
from .space import FixedPoint, GKMEdge, GKMSpace, Lift, ProductInfo, SpaceError, TorusAction

SCHEMA_VERSION = 1

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"}
_INTVEC = {"type": "array", "items": {"type": "integer"}}

SPACE_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "space-document-v1",
    "type": "object",
    "required": ["schema", "rank", "complex_dim", "fixed_points", "edges"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "rank": {"type": "integer", "minimum": 1},
        "variables": {"type": "array", "items": {"type": "string"}},
        "complex_dim": {"type": "integer", "minimum": 0},
        "fixed_points": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "moment", "weights"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "moment": {"type": "array", "items": _RATIONAL},
                    "weights": {"type": "array", "items": _INTVEC},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "weight"],
                "additionalProperties": False,
                "properties": {
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                    "weight": _INTVEC,
                },
            },
        },
        "lift": {
            "type": "object",
            "required": ["inclusion", "space"],
            "additionalProperties": False,
            "properties": {
                "inclusion": {"type": "array", "items": _INTVEC},
                "space": {"$ref": "#"},
            },
        },
        "factors": {
            "type": "object",
            "required": ["left", "right", "dilation", "pairs"],
            "additionalProperties": False,
            "properties": {
                "left": {"$ref": "#"},
                "right": {"$ref": "#"},
                "dilation": _RATIONAL,
                "pairs": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
                },
            },
        },
    },
}


class DocumentError(SpaceError):
    """A space document that cannot be parsed; carries a location when known."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _check_lengths(doc: dict, where: str) -> None:
    d = doc["rank"]
    n = doc["complex_dim"]
    if "variables" in doc and len(doc["variables"]) != d:
        raise DocumentError(f"expected {d} variable names", f"{where}/variables")
    for i, fp in enumerate(doc["fixed_points"]):
        loc = f"{where}/fixed_points/{i}"
        if len(fp["moment"]) != d:
            raise DocumentError(f"moment must have {d} coordinates", f"{loc}/moment")
        if len(fp["weights"]) != n:
            raise DocumentError(f"expected {n} weights, found {len(fp['weights'])}", f"{loc}/weights")
        for j, w in enumerate(fp["weights"]):
            if len(w) != d:
                raise DocumentError(f"weight must have {d} entries", f"{loc}/weights/{j}")
    for i, e in enumerate(doc["edges"]):
        if len(e["weight"]) != d:
            raise DocumentError(f"weight must have {d} entries", f"{where}/edges/{i}/weight")


def from_document(doc: dict, _where: str = "") -> GKMSpace:
    """Build a space from an already-decoded document."""
    if not _where:
        try:
            jsonschema.validate(doc, SPACE_SCHEMA)
        except jsonschema.ValidationError as err:
            path = "/".join(str(p) for p in err.absolute_path)
            raise DocumentError(err.message, "/" + path) from None
    _check_lengths(doc, _where)
    action = TorusAction(doc["rank"], tuple(doc.get("variables", ())))
    try:
        points = tuple(
            FixedPoint(
                fp["name"],
                tuple(Fraction(c) for c in fp["moment"]),
                tuple(tuple(w) for w in fp["weights"]),
            )
            for fp in doc["fixed_points"]
        )
        edges = tuple(GKMEdge(e["from"], e["to"], tuple(e["weight"])) for e in doc["edges"])
    except (ValueError, ZeroDivisionError) as err:
        raise DocumentError(str(err), _where or "/") from None

    lift = None
    if "lift" in doc:
        sub = from_document(doc["lift"]["space"], f"{_where}/lift/space")
        lift = Lift(sub, tuple(tuple(r) for r in doc["lift"]["inclusion"]))
    factors = None
    if "factors" in doc:
        f = doc["factors"]
        factors = ProductInfo(
            from_document(f["left"], f"{_where}/factors/left"),
            from_document(f["right"], f"{_where}/factors/right"),
            Fraction(f["dilation"]),
            tuple((a, b) for a, b in f["pairs"]),
        )
    try:
        return GKMSpace(action, points, edges, doc["complex_dim"], lift=lift, factors=factors,
                        label=doc.get("name", ""))
    except SpaceError as err:
        raise DocumentError(str(err), _where or "/") from None


def to_document(space: GKMSpace) -> dict:
    """Canonical document for ``space``; inverse of :func:`from_document`."""
    doc: Dict[str, Any] = {"schema": SCHEMA_VERSION}
    if space.label:
        doc["name"] = space.label
    doc["rank"] = space.rank
    doc["variables"] = list(space.action.names)
    doc["complex_dim"] = space.complex_dim
    doc["fixed_points"] = [
        {
            "name": p.name,
            "moment": [format_fraction(c) for c in p.moment],
            "weights": [list(w) for w in p.weights],
        }
        for p in space.points
    ]
    doc["edges"] = [{"from": e.source, "to": e.target, "weight": list(e.weight)} for e in space.edges]
    if space.lift is not None:
        doc["lift"] = {
            "inclusion": [list(r) for r in space.lift.inclusion],
            "space": to_document(space.lift.space),
        }
    if space.factors is not None:
        f = space.factors
        doc["factors"] = {
            "left": to_document(f.left),
            "right": to_document(f.right),
            "dilation": format_fraction(f.dilation),
            "pairs": [list(pq) for pq in f.pairs],
        }
    return doc


def dumps(obj: Any) -> str:
    """Byte-stable JSON text used for every document and report we write."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _reject_float(text: str):
    raise DocumentError(f"floating-point number {text} is not allowed; write rationals as \"p/q\" strings")


def loads(text: str) -> GKMSpace:
    try:
        doc = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as err:
        raise DocumentError(err.msg, f"line {err.lineno} column {err.colno}") from None
    return from_document(doc)


def serialize(space: GKMSpace) -> str:
    return dumps(to_document(space))


def load_space(spec: Union[str, Path]) -> GKMSpace:
    """Resolve ``builtin:<name>`` or read a document from a file path."""
    spec = str(spec)
    if spec.startswith("builtin:"):
        try:
            return builtin(spec[len("builtin:"):])
        except SpaceError as err:
            raise DocumentError(str(err)) from None
    try:
        text = Path(spec).read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(err.strerror or str(err), spec) from None
    return loads(text)
