"""Hypergraphs with real coefficients.

A hypergraph is a vertex list plus an ordered multiset of edges; every edge
carries a unique id and a map from its member vertices to nonzero reals.
Membership and a nonzero coefficient are the same thing, so a stored zero is
an error reported by :func:`validate`.

Values are immutable. Vertex declaration order fixes the row/column order of
every matrix built from a hypergraph, and all perturbations keep the relative
order of what survives.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .exceptions import HypergraphError, UnknownEdgeError, UnknownVertexError


@dataclass(frozen=True)
class Edge:
    id: str
    coefficients: tuple[tuple[str, float], ...] = ()

    @classmethod
    def from_mapping(cls, id: str, coefficients: Mapping[str, float] | Iterable[tuple[str, float]]) -> Edge:
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        return cls(id, tuple((str(v), float(c)) for v, c in items))

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coefficients)

    @property
    def cardinality(self) -> int:
        return len(self.coefficients)

    def coefficient(self, v: str) -> float:
        for w, c in self.coefficients:
            if w == v:
                return c
        return 0.0

    def as_dict(self) -> dict[str, float]:
        return dict(self.coefficients)


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Mapping[str, Mapping[str, float]] | Iterable[tuple[str, Mapping[str, float]]] = ()) -> Hypergraph:
        """Convenience constructor: ``build(["a", "b"], {"e": {"a": 1, "b": -1}})``."""
        items = edges.items() if isinstance(edges, Mapping) else edges
        return cls(tuple(vertices), tuple(Edge.from_mapping(eid, coeffs) for eid, coeffs in items))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def vertex_index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertexError(v) from None

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise UnknownEdgeError(eid)

    def isolated_vertices(self) -> tuple[str, ...]:
        covered = {v for e in self.edges for v, _ in e.coefficients}
        return tuple(v for v in self.vertices if v not in covered)


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[str, ...] = ()
    isolated: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(G: Hypergraph) -> ValidationResult:
    """Check the structural invariants; isolated vertices are reported, not rejected."""
    problems = []
    for label, count in Counter(G.vertices).items():
        if count > 1:
            problems.append(f"duplicate vertex {label!r}")
    if any(not v for v in G.vertices):
        problems.append("empty vertex label")
    for label, count in Counter(G.edge_ids).items():
        if count > 1:
            problems.append(f"duplicate edge id {label!r}")
    if any(not eid for eid in G.edge_ids):
        problems.append("empty edge id")
    known = set(G.vertices)
    for e in G.edges:
        seen = set()
        for v, c in e.coefficients:
            if v not in known:
                problems.append(f"edge {e.id!r} references unknown vertex {v!r}")
            if v in seen:
                problems.append(f"edge {e.id!r} lists vertex {v!r} twice")
            seen.add(v)
            if c == 0:
                problems.append(f"zero coefficient stored for ({v!r}, {e.id!r})")
            elif not math.isfinite(c):
                problems.append(f"non-finite coefficient for ({v!r}, {e.id!r})")
    return ValidationResult(tuple(problems), G.isolated_vertices())


def cardinality(G: Hypergraph, eid: str) -> int:
    return G.edge(eid).cardinality


def degree(G: Hypergraph, v: str) -> float:
    """Sum over edges of the squared coefficient of ``v``."""
    G.vertex_index(v)
    total = 0.0
    for e in G.edges:
        c = e.coefficient(v)
        total += c * c
    return total


def delete_vertex(G: Hypergraph, v: str) -> Hypergraph:
    """Drop ``v`` and its coefficients; every edge survives, possibly empty."""
    G.vertex_index(v)
    vertices = tuple(w for w in G.vertices if w != v)
    edges = tuple(Edge(e.id, tuple(p for p in e.coefficients if p[0] != v)) for e in G.edges)
    return Hypergraph(vertices, edges)


def delete_vertices(G: Hypergraph, vs: Iterable[str]) -> Hypergraph:
    for v in vs:
        G = delete_vertex(G, v)
    return G


def _check_edges(G: Hypergraph, F: Iterable[str]) -> set[str]:
    F = set(F)
    ids = set(G.edge_ids)
    for eid in sorted(F):
        if eid not in ids:
            raise UnknownEdgeError(eid)
    return F


def delete_edges(G: Hypergraph, F: Iterable[str]) -> Hypergraph:
    F = _check_edges(G, F)
    return Hypergraph(G.vertices, tuple(e for e in G.edges if e.id not in F))


def restrict(G: Hypergraph, F: Iterable[str]) -> Hypergraph:
    """Keep only the edges in ``F`` and the vertices they touch."""
    F = _check_edges(G, F)
    edges = tuple(e for e in G.edges if e.id in F)
    covered = {v for e in edges for v in e.vertices}
    return Hypergraph(tuple(v for v in G.vertices if v in covered), edges)


@dataclass(frozen=True)
class HypergraphClass:
    oriented: bool
    signed_graph: bool
    simple_graph: bool
    weighted: bool
    has_loops: bool
    has_isolated_vertices: bool

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


def classify(G: Hypergraph) -> HypergraphClass:
    coeffs = [c for e in G.edges for _, c in e.coefficients]
    oriented = all(c in (-1.0, 1.0) for c in coeffs)
    signed = oriented and all(e.cardinality == 2 for e in G.edges)
    simple = signed and all(sorted(e.as_dict().values()) == [-1.0, 1.0] for e in G.edges)
    weighted = all(len({c for _, c in e.coefficients}) <= 1 for e in G.edges)
    return HypergraphClass(
        oriented=oriented,
        signed_graph=signed,
        simple_graph=simple,
        weighted=weighted,
        has_loops=any(e.cardinality == 1 for e in G.edges),
        has_isolated_vertices=bool(G.isolated_vertices()),
    )


@dataclass(frozen=True)
class GeneratorParams:
    n_vertices: int = 5
    n_edges: int = 8
    max_cardinality: int = 3
    coefficient_range: tuple[float, float] = (-2.0, 2.0)
    min_abs_coefficient: float = 0.1
    forbid_isolated: bool = True
    seed: int = 0

    def intervals(self) -> list[tuple[float, float]]:
        """Sub-intervals of the coefficient range with ``|c| >= min_abs_coefficient``."""
        lo, hi = self.coefficient_range
        a = self.min_abs_coefficient
        parts = [(lo, min(hi, -a)), (max(lo, a), hi)]
        return [(x, y) for x, y in parts if y > x]

    def check(self) -> None:
        lo, hi = self.coefficient_range
        if self.n_vertices < 0 or self.n_edges < 0:
            raise HypergraphError("vertex and edge counts must be non-negative")
        if self.max_cardinality < 1:
            raise HypergraphError("max_cardinality must be at least 1")
        if not lo < hi:
            raise HypergraphError("coefficient_range needs lo < hi")
        if not self.min_abs_coefficient > 0:
            raise HypergraphError("min_abs_coefficient must be positive")
        if self.n_edges and self.max_cardinality > self.n_vertices:
            raise HypergraphError(
                f"max_cardinality {self.max_cardinality} exceeds n_vertices {self.n_vertices}"
            )
        if not self.intervals():
            raise HypergraphError("no coefficient in range satisfies the minimum magnitude")
        if self.forbid_isolated and self.n_vertices and not self.n_edges:
            raise HypergraphError("cannot cover vertices without edges")


def generate_random(params: GeneratorParams) -> Hypergraph:
    """Seeded random hypergraph; identical params give identical output."""
    params.check()
    rng = np.random.default_rng(params.seed)
    intervals = params.intervals()
    lengths = np.array([y - x for x, y in intervals])
    weights = lengths / lengths.sum()
    vertices = tuple(f"v{i + 1}" for i in range(params.n_vertices))

    members: list[dict[int, float]] = []
    for _ in range(params.n_edges):
        size = int(rng.integers(1, params.max_cardinality + 1))
        chosen = np.sort(rng.choice(params.n_vertices, size=size, replace=False))
        coeffs = {}
        for i in chosen:
            x, y = intervals[int(rng.choice(len(intervals), p=weights))]
            # uniform() draws from [x, y), so |c| >= min_abs_coefficient on both sides
            coeffs[int(i)] = float(rng.uniform(x, y))
        members.append(coeffs)

    if params.forbid_isolated:
        covered = {i for coeffs in members for i in coeffs}
        for i in range(params.n_vertices):
            if i not in covered:
                members[int(rng.integers(params.n_edges))][i] = 1.0

    edges = tuple(
        Edge(f"e{j + 1}", tuple((vertices[i], coeffs[i]) for i in sorted(coeffs)))
        for j, coeffs in enumerate(members)
    )
    return Hypergraph(vertices, edges)


def with_empty_edge(G: Hypergraph, eid: str | None = None) -> Hypergraph:
    """Append an edge with no members (the shape vertex deletion can leave behind)."""
    if eid is None:
        eid = f"e{G.m + 1}"
        while eid in G.edge_ids:
            eid += "'"
    return Hypergraph(G.vertices, G.edges + (Edge(eid),))
