"""Seeded random campaigns that run a verifier over many instances."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from . import interlacing as il
from .document import to_document
from .exceptions import HypergraphError
from .hypergraph import Edge, GeneratorParams, Hypergraph, delete_edges, generate_random, with_empty_edge

THEOREMS = ("vertex-A", "vertex-K", "vertex-L", "edge-K", "edgeset-A", "edgeset-L", "butler", "loop", "traces")

COEFFICIENT_RANGES = ((-2.0, 2.0), (0.1, 3.0), (-1.0, 1.0), (-5.0, 0.5))


@dataclass(frozen=True)
class InstanceConfig:
    max_vertices: int = 15
    max_edges: int = 20
    max_cardinality: int = 5
    #: probability of replacing every coefficient by its sign
    p_oriented: float = 0.25
    #: probability of appending an empty edge
    p_empty_edge: float = 0.2


def instance_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def random_instance(seed: int, config: InstanceConfig = InstanceConfig()) -> Hypergraph:
    """A random hypergraph without isolated vertices, of varied size and flavour."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, config.max_vertices + 1))
    # an appended empty edge counts toward max_edges
    empty = config.max_edges >= 2 and rng.random() < config.p_empty_edge
    m = int(rng.integers(1, config.max_edges - empty + 1))
    params = GeneratorParams(
        n_vertices=n,
        n_edges=m,
        max_cardinality=int(rng.integers(1, min(n, config.max_cardinality) + 1)),
        coefficient_range=COEFFICIENT_RANGES[int(rng.integers(len(COEFFICIENT_RANGES)))],
        min_abs_coefficient=0.1,
        forbid_isolated=True,
        seed=int(rng.integers(2**63)),
    )
    G = generate_random(params)
    if rng.random() < config.p_oriented:
        G = Hypergraph(G.vertices, tuple(Edge(e.id, tuple((v, float(np.sign(c))) for v, c in e.coefficients)) for e in G.edges))
    if empty:
        G = with_empty_edge(G)
    return G


def instances(seed: int, count: int, config: InstanceConfig = InstanceConfig()):
    for i in range(count):
        yield i, random_instance(instance_seed(seed, i), config)


def random_edge_subsets(G: Hypergraph, rng: np.random.Generator, count: int, pool: list[str] | None = None) -> list[tuple[str, ...]]:
    pool = list(G.edge_ids if pool is None else pool)
    if not pool:
        return []
    out = []
    for _ in range(count):
        size = int(rng.integers(1, len(pool) + 1))
        picked = set(rng.choice(len(pool), size=size, replace=False).tolist())
        out.append(tuple(eid for i, eid in enumerate(pool) if i in picked))
    return out


def _keeps_vertices_covered(G: Hypergraph, F) -> bool:
    return not delete_edges(G, F).isolated_vertices()


def run_theorem(G: Hypergraph, theorem: str, rng: np.random.Generator, tol: float = il.DEFAULT_TOL, subsets: int = 5):
    """All reports for one instance, plus the number of perturbations skipped.

    Skipped cases are those outside a theorem's hypotheses, chiefly
    normalized-Laplacian deletions that would leave an isolated vertex.
    """
    has_isolated = bool(G.isolated_vertices())
    if theorem.startswith("vertex-"):
        op = theorem[-1]
        if op == "L" and has_isolated:
            return [], G.n
        return il.verify_vertex_deletions(G, op, tol=tol), 0
    if theorem == "edge-K":
        return il.verify_edge_deletions_kirchhoff(G, tol=tol), 0
    if theorem.startswith("edgeset-"):
        op = theorem[-1]
        Fs = random_edge_subsets(G, rng, subsets)
        if op == "A":
            keep = [F for F in Fs if any(G.edge(e).cardinality for e in F)]
        else:
            keep = [] if has_isolated else [F for F in Fs if _keeps_vertices_covered(G, F)]
        return (il.verify_edge_sets(G, keep, op, tol) if keep else []), len(Fs) - len(keep)
    if theorem == "butler":
        pool = [e.id for e in G.edges if e.cardinality >= 2]
        Fs = [(eid,) for eid in pool] + random_edge_subsets(G, rng, subsets, pool)
        keep = [] if has_isolated else [F for F in Fs if _keeps_vertices_covered(G, F)]
        return (il.verify_butler_many(G, keep, tol) if keep else []), len(Fs) - len(keep)
    if theorem == "loop":
        loops = [e.id for e in G.edges if e.cardinality == 1]
        keep = [] if has_isolated else [eid for eid in loops if _keeps_vertices_covered(G, {eid})]
        return (il.verify_loop_removals(G, keep, tol) if keep else []), len(loops) - len(keep)
    if theorem == "traces":
        return [il.verify_trace_identities(G, tol)], 0
    raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")


@dataclass
class CampaignSummary:
    theorem: str
    seed: int
    count: int
    tolerance: float
    reports: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    #: failing companion reports (e.g. the dual mechanism behind the Kirchhoff edge chain)
    companion_failures: int = 0
    worst_margin: float | None = None
    first_failure: dict | None = None
    failing_instances: list[int] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.failed == 0 and self.errors == 0

    def as_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["verdict"] = self.verdict
        return out


def run_campaign(
    theorem: str,
    count: int,
    seed: int = 0,
    tol: float = il.DEFAULT_TOL,
    config: InstanceConfig = InstanceConfig(),
    subsets: int = 5,
) -> CampaignSummary:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    summary = CampaignSummary(theorem, seed, count, tol)
    for index, G in instances(seed, count, config):
        rng = np.random.default_rng(instance_seed(seed, index) ^ 0x5EED)
        try:
            reports, skipped = run_theorem(G, theorem, rng, tol, subsets)
        except HypergraphError as exc:
            summary.errors += 1
            if summary.first_failure is None:
                summary.first_failure = {"instance": index, "error": str(exc), "document": to_document(G)}
            continue
        summary.skipped += skipped
        bad = False
        for report in reports:
            summary.reports += 1
            summary.companion_failures += sum(not c.verdict for c in report.companions)
            margin = report.worst_margin
            if margin is not None and (summary.worst_margin is None or margin < summary.worst_margin):
                summary.worst_margin = margin
            if report.verdict:
                summary.passed += 1
                continue
            summary.failed += 1
            bad = True
            if summary.first_failure is None:
                summary.first_failure = {"instance": index, "report": report.as_dict(), "document": to_document(G)}
        if bad:
            summary.failing_instances.append(index)
    return summary
