"""Searches for instances where a one-step-stronger interlacing bound fails.

Two targets are supported:

``butler_strictness``
    a non-loop edge ``e`` of cardinality ``t`` with
    ``lambda_k(L(G\\e)) < lambda_{k-t+2}(L(G))`` for some k. For simple graphs
    (``t = 2``) this says that ``lambda_k(L(G)) <= lambda_k(L(G\\e))`` is false.
``edgeset_L_strictness``
    a single edge ``F = {e}`` of a hypergraph touching ``t`` vertices for which
    ``lambda_{k-t+1}(L(G)) <= lambda_k(L(G\\F)) <= lambda_{k+t-1}(L(G))``
    fails for some ``k`` in ``t .. n-t+1``.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .document import to_document
from .eigen import spectra
from .hypergraph import Edge, GeneratorParams, Hypergraph, delete_edges, generate_random, restrict
from .interlacing import DEFAULT_TOL, scaled_tolerance
from .operators import normalized_laplacian

TARGETS = ("butler_strictness", "edgeset_L_strictness")


@dataclass(frozen=True)
class Witness:
    target: str
    hypergraph: Hypergraph
    edges: tuple[str, ...]
    k: int
    #: the stronger bound that fails, and the eigenvalue of the perturbed operator
    bound: float
    value: float
    side: str

    def describe(self) -> str:
        rel = "<" if self.side == "lower" else ">"
        return f"{self.target}: lambda_{self.k}(L(G\\{{{','.join(self.edges)}}})) = {self.value:.10g} {rel} {self.bound:.10g}"

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "edges": list(self.edges),
            "k": self.k,
            "bound": self.bound,
            "value": self.value,
            "side": self.side,
            "document": to_document(self.hypergraph),
        }


def _candidate_edges(G: Hypergraph, target: str) -> list[str]:
    if target == "butler_strictness":
        return [e.id for e in G.edges if e.cardinality >= 2]
    return [e.id for e in G.edges if e.cardinality >= 1]


def _witnesses_in(G: Hypergraph, target: str, tol: float) -> list[Witness]:
    if G.n == 0 or G.isolated_vertices():
        return []
    edges = []
    for eid in _candidate_edges(G, target):
        H = delete_edges(G, {eid})
        if not H.isolated_vertices():
            edges.append((eid, H))
    if not edges:
        return []
    specG, *specs = spectra([normalized_laplacian(G)] + [normalized_laplacian(H) for _, H in edges])
    found = []
    n = G.n
    for (eid, _), specH in zip(edges, specs):
        eps = scaled_tolerance(tol, specG, specH)
        if target == "butler_strictness":
            shift = G.edge(eid).cardinality - 2
            for k in range(shift + 1, n + 1):
                bound, value = specG.lam(k - shift), specH.lam(k)
                if value < bound - eps:
                    found.append(Witness(target, G, (eid,), k, bound, value, "lower"))
                    break
        else:
            s = restrict(G, {eid}).n - 1
            for k in range(s + 1, n - s + 1):
                lo, hi, value = specG.lam(k - s), specG.lam(k + s), specH.lam(k)
                if value < lo - eps:
                    found.append(Witness(target, G, (eid,), k, lo, value, "lower"))
                    break
                if value > hi + eps:
                    found.append(Witness(target, G, (eid,), k, hi, value, "upper"))
                    break
    return found


def tightness_search(
    space: Iterable[Hypergraph],
    target: str,
    budget: int,
    tol: float = DEFAULT_TOL,
    max_witnesses: int | None = None,
) -> list[Witness]:
    """Scan up to ``budget`` candidates from ``space`` and collect witnesses.

    Stops early once ``max_witnesses`` have been found. Candidates with
    isolated vertices, and deletions that would create one, are skipped.
    """
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    found: list[Witness] = []
    for G in itertools.islice(space, budget):
        found.extend(_witnesses_in(G, target, tol))
        if max_witnesses is not None and len(found) >= max_witnesses:
            return found[:max_witnesses]
    return found


def simple_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Hypergraph:
    """Simple graph on ``v1..vn``; each edge gets +1 on its lower and -1 on its higher endpoint."""
    vertices = tuple(f"v{i + 1}" for i in range(n))
    edges = tuple(
        Edge(f"e{j + 1}", ((vertices[a], 1.0), (vertices[b], -1.0)))
        for j, (a, b) in enumerate(sorted((min(p), max(p)) for p in pairs))
    )
    return Hypergraph(vertices, edges)


def random_connected_simple_graphs(
    max_vertices: int = 7, seed: int = 0, min_vertices: int = 2, patience: int = 1000
) -> Iterator[Hypergraph]:
    """Distinct random connected simple graphs (labelled, not up to isomorphism).

    Each draw is a random spanning tree plus independently kept extra pairs.
    The stream ends after ``patience`` consecutive duplicates.
    """
    rng = np.random.default_rng(seed)
    seen: set[tuple] = set()
    misses = 0
    while misses < patience:
        n = int(rng.integers(min_vertices, max_vertices + 1))
        # relabel the tree so that every labelled spanning tree is reachable
        perm = rng.permutation(n)
        pairs = {tuple(sorted((int(perm[rng.integers(i)]), int(perm[i])))) for i in range(1, n)}
        density = rng.random()
        for a, b in itertools.combinations(range(n), 2):
            if (a, b) not in pairs and rng.random() < density:
                pairs.add((a, b))
        key = (n, tuple(sorted(pairs)))
        if key in seen:
            misses += 1
            continue
        misses = 0
        seen.add(key)
        yield simple_graph(n, pairs)


def random_hypergraphs(params: GeneratorParams) -> Iterator[Hypergraph]:
    """``generate_random`` at seeds ``params.seed``, ``params.seed + 1``, ..."""
    for seed in itertools.count(params.seed):
        yield generate_random(dataclasses.replace(params, seed=seed))
