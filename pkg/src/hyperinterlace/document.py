"""JSON document format for hypergraphs.

::

    {"vertices": ["v1", "v2"],
     "edges": [{"id": "e1", "coefficients": {"v1": 1.0, "v2": -1.0}}]}

Coefficients are written with Python's shortest round-tripping float repr, so
``parse_hypergraph(serialize_hypergraph(G)) == G`` holds exactly.
"""

from __future__ import annotations

import hashlib
import json
import numbers

from .exceptions import DocumentError
from .hypergraph import Edge, Hypergraph, validate


def _no_duplicate_keys(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DocumentError(f"duplicate key {key!r}")
        seen[key] = value
    return seen


def _coefficient(value, vertex, eid) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DocumentError(f"coefficient of {vertex!r} in edge {eid!r} is not a number")
    return float(value)


def from_document(doc: dict) -> Hypergraph:
    if not isinstance(doc, dict) or set(doc) - {"vertices", "edges"} or "vertices" not in doc:
        raise DocumentError('expected an object with "vertices" and "edges"')
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise DocumentError('"vertices" must be a list of strings')
    edges = []
    for raw in doc.get("edges", []):
        if not isinstance(raw, dict) or not isinstance(raw.get("id"), str):
            raise DocumentError('each edge needs a string "id"')
        coeffs = raw.get("coefficients", {})
        if not isinstance(coeffs, dict):
            raise DocumentError(f'"coefficients" of edge {raw["id"]!r} must be an object')
        edges.append(Edge(raw["id"], tuple((v, _coefficient(c, v, raw["id"])) for v, c in coeffs.items())))
    G = Hypergraph(tuple(vertices), tuple(edges))
    result = validate(G)
    if not result.ok:
        raise DocumentError("; ".join(result.violations))
    return G


def parse_hypergraph(text: str) -> Hypergraph:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def to_document(G: Hypergraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"id": e.id, "coefficients": e.as_dict()} for e in G.edges],
    }


def serialize_hypergraph(G: Hypergraph, indent: int | None = 2) -> str:
    return json.dumps(to_document(G), indent=indent)


def digest(G: Hypergraph) -> str:
    canonical = json.dumps(to_document(G), separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def load(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())
