"""JSON interchange for complexes and ideals.

Complex document: {"kind": "complex", "schema": 1, "facets": [[...], ...]}
with optional "name" and, when it differs from the union of the facets,
"ground". Ideal document: {"kind": "ideal", "schema": 1, "num_vars": n,
"generators": [[e1, ..., en], ...]}. Documents without "kind" are sniffed
by their keys.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complex import SimplicialComplex, build_complex, face_mask, face_vertices
from .errors import InputError
from .monomial import MonomialIdeal

SCHEMA_VERSION = 1


def dumps(obj: Any) -> str:
    """Byte-stable JSON rendering used for every report."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def complex_to_json(c: SimplicialComplex) -> dict:
    doc: dict[str, Any] = {"kind": "complex", "schema": SCHEMA_VERSION,
                           "facets": [list(f) for f in c.facets]}
    if c.name:
        doc["name"] = c.name
    if c.ground_mask != c.vertex_mask:
        doc["ground"] = list(face_vertices(c.ground_mask))
    return doc


def complex_from_json(doc: dict) -> SimplicialComplex:
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise InputError("complex document needs a list of facets")
    name = doc.get("name")
    ground = doc.get("ground")
    if facets and not any(facets):
        # [[]] is the void complex {∅}
        return SimplicialComplex.from_masks([0], ground=face_mask(ground or []), name=name)
    c = build_complex(facets, name=name)
    if ground is not None:
        c = SimplicialComplex.from_masks(c.facet_masks, ground=face_mask(ground), name=name)
    return c


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"kind": "ideal", "schema": SCHEMA_VERSION, "num_vars": ideal.num_vars,
            "generators": [list(g) for g in ideal.generators]}


def ideal_from_json(doc: dict) -> MonomialIdeal:
    try:
        n = int(doc["num_vars"])
        gens = tuple(tuple(int(a) for a in g) for g in doc["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed ideal document: {exc}") from exc
    return MonomialIdeal(n, gens)


def from_json(doc: Any) -> SimplicialComplex | MonomialIdeal:
    if not isinstance(doc, dict):
        raise InputError("expected a JSON object")
    schema = doc.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {schema}")
    kind = doc.get("kind")
    if kind is None:
        kind = "complex" if "facets" in doc else "ideal" if "generators" in doc else None
    if kind == "complex":
        return complex_from_json(doc)
    if kind == "ideal":
        return ideal_from_json(doc)
    raise InputError(f"unknown document kind {kind!r}")


def to_json(obj: SimplicialComplex | MonomialIdeal) -> dict:
    if isinstance(obj, SimplicialComplex):
        return complex_to_json(obj)
    return ideal_to_json(obj)


def loads(text: str) -> SimplicialComplex | MonomialIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return from_json(doc)


def load(path: str | Path) -> SimplicialComplex | MonomialIdeal:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return loads(text)
