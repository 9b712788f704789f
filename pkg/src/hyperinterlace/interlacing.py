"""Numerical verification of eigenvalue interlacing under vertex and edge deletion.

Every verifier builds the operators of a hypergraph and of its perturbation,
computes both spectra, and reports, index by index, the inequality it checks
together with signed margins. Indices ``k`` are 1-based and eigenvalues are
ascending, so ``lambda_1`` is the smallest.

Tolerance policy: verifiers take a base tolerance ``tol`` and accept a margin
of ``-tol * max(1, rho)``, where ``rho`` is the largest eigenvalue magnitude of
the spectra being compared. :func:`check_shifted_interlacing` is the raw
primitive and uses its ``tol`` as given.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .eigen import Spectrum, spectra
from .exceptions import DimensionMismatchError, IsolatedVertexError, PreconditionError
from .hypergraph import Hypergraph, delete_edges, delete_vertex, restrict
from .operators import OPERATORS, degrees, dual_kirchhoff_laplacian, kirchhoff_laplacian

DEFAULT_TOL = 1e-8


class Theorem(str, enum.Enum):
    CAUCHY_VERTEX_A = "cauchy_vertex_A"
    CAUCHY_VERTEX_K = "cauchy_vertex_K"
    CAUCHY_VERTEX_L = "cauchy_vertex_L"
    CAUCHY_EDGE_K = "cauchy_edge_K"
    QM_GENERAL = "qm_general"
    EDGESET_A = "edgeset_A"
    EDGESET_L = "edgeset_L"
    BUTLER = "butler"
    LOOP_L = "loop_L"
    TRACES = "traces"


VERTEX_THEOREMS = {"A": Theorem.CAUCHY_VERTEX_A, "K": Theorem.CAUCHY_VERTEX_K, "L": Theorem.CAUCHY_VERTEX_L}
EDGESET_THEOREMS = {"A": Theorem.EDGESET_A, "L": Theorem.EDGESET_L}


@dataclass(frozen=True)
class Check:
    k: int
    value: float
    lower_bound: float | None = None
    upper_bound: float | None = None
    passed: bool = True
    label: str = ""

    @property
    def lower_margin(self) -> float | None:
        return None if self.lower_bound is None else self.value - self.lower_bound

    @property
    def upper_margin(self) -> float | None:
        return None if self.upper_bound is None else self.upper_bound - self.value

    def as_dict(self) -> dict:
        out = {
            "k": self.k,
            "lower_bound": self.lower_bound,
            "value": self.value,
            "upper_bound": self.upper_bound,
            "lower_margin": self.lower_margin,
            "upper_margin": self.upper_margin,
            "pass": self.passed,
        }
        if self.label:
            out["label"] = self.label
        return out


def _bounded(k: int, value: float, lower: float | None, upper: float | None, tol: float, label: str = "") -> Check:
    ok = (lower is None or value - lower >= -tol) and (upper is None or upper - value >= -tol)
    return Check(k, float(value), lower, upper, bool(ok), label)


@dataclass(frozen=True)
class PerturbationSpec:
    """Which deletion was applied, with the derived counts the theorems index by.

    ``t`` is the vertex count of the restriction to the deleted edges for the
    edge-set corollary, and the summed cardinality of the deleted edges for
    the Butler-type bound.
    """

    kind: str
    vertex: str | None = None
    edges: tuple[str, ...] = ()
    t: int | None = None

    @property
    def F_size(self) -> int:
        return len(self.edges)

    def as_dict(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex, "edges": list(self.edges), "t": self.t, "F_size": self.F_size}


@dataclass(frozen=True)
class InterlacingReport:
    theorem: Theorem
    checks: tuple[Check, ...]
    tolerance_used: float
    perturbation: PerturbationSpec | None = None
    notes: tuple[str, ...] = ()
    #: principal-submatrix premise, when the verifier checks one
    premise: bool | None = None
    label: str = ""
    companions: tuple[InterlacingReport, ...] = field(default=())

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks) and self.premise is not False

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def worst_margin(self) -> float | None:
        margins = [m for c in self.checks for m in (c.lower_margin, c.upper_margin) if m is not None]
        return min(margins) if margins else None

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "label": self.label,
            "verdict": self.verdict,
            "tolerance_used": self.tolerance_used,
            "premise": self.premise,
            "perturbation": None if self.perturbation is None else self.perturbation.as_dict(),
            "notes": list(self.notes),
            "checks": [c.as_dict() for c in self.checks],
            "companions": [r.as_dict() for r in self.companions],
        }


def scaled_tolerance(tol: float, *specs: Spectrum) -> float:
    return tol * max([1.0] + [s.radius for s in specs])


def check_shifted_interlacing(
    specQ: Spectrum,
    specM: Spectrum,
    l: int,
    r: int,
    tol: float = DEFAULT_TOL,
    theorem: Theorem = Theorem.QM_GENERAL,
) -> InterlacingReport:
    """``lambda_{k-l}(Q) <= lambda_k(M) <= lambda_{k+r}(Q)`` for ``k = l+1 .. n-r``.

    Valid whenever ``Q`` (n x n) and ``M`` (m x m) share a principal submatrix
    of size ``n - r = m - l``.
    """
    n, m = specQ.dim, specM.dim
    if l < 0 or r < 0:
        raise ValueError("shifts must be non-negative")
    if n - r != m - l or n - r < 0:
        raise DimensionMismatchError(f"n - r = {n - r} but m - l = {m - l}")
    checks = tuple(
        _bounded(k, specM.lam(k), specQ.lam(k - l), specQ.lam(k + r), tol)
        for k in range(l + 1, n - r + 1)
    )
    notes = () if checks else ("range empty",)
    return InterlacingReport(theorem, checks, tol, notes=notes)


def _require_no_isolated(*graphs: Hypergraph) -> None:
    for H in graphs:
        isolated = H.isolated_vertices()
        if isolated:
            raise IsolatedVertexError(isolated)


def _operator(name: str) -> Callable[[Hypergraph], np.ndarray]:
    if name not in OPERATORS:
        raise ValueError(f"unknown operator {name!r}")
    return OPERATORS[name]


# -- vertex deletion ---------------------------------------------------------


def verify_vertex_deletions(
    G: Hypergraph, operator: str, vertices: Iterable[str] | None = None, tol: float = DEFAULT_TOL
) -> list[InterlacingReport]:
    """Cauchy interlacing for ``G \\ v`` against ``G``, for each listed vertex (default: all)."""
    if operator not in VERTEX_THEOREMS:
        raise ValueError(f"vertex deletion is verified for A, K, L; got {operator!r}")
    build = _operator(operator)
    vertices = list(G.vertices if vertices is None else vertices)
    positions = [G.vertex_index(v) for v in vertices]
    MG = build(G)
    deleted = [build(delete_vertex(G, v)) for v in vertices]
    specG, *specs = spectra([MG] + deleted)
    reports = []
    for v, i, MH, specH in zip(vertices, positions, deleted, specs):
        principal = np.delete(np.delete(MG, i, axis=0), i, axis=1)
        tol_used = scaled_tolerance(tol, specG, specH)
        base = check_shifted_interlacing(specG, specH, 0, 1, tol_used, VERTEX_THEOREMS[operator])
        reports.append(
            InterlacingReport(
                base.theorem,
                base.checks,
                tol_used,
                PerturbationSpec("vertex", vertex=v),
                base.notes,
                premise=bool(np.array_equal(principal, MH)),
            )
        )
    return reports


def verify_vertex_deletion(G: Hypergraph, v: str, operator: str, tol: float = DEFAULT_TOL) -> InterlacingReport:
    return verify_vertex_deletions(G, operator, [v], tol)[0]


# -- single-edge deletion, Kirchhoff Laplacian -------------------------------


def verify_edge_deletions_kirchhoff(
    G: Hypergraph, edges: Iterable[str] | None = None, tol: float = DEFAULT_TOL
) -> list[InterlacingReport]:
    """Kirchhoff chain ``lambda_k(K(G)) <= lambda_k(K(G\\e)) <= lambda_{k+1}(K(G))``, k = 1..n-1.

    The chain is checked literally on the n x n spectra. Two companion reports
    come with it: the (m-1)-in-m Cauchy interlacing of the dual matrices
    ``K*(G \\ e)`` and ``K*(G)``, and the rank-one downdate chain
    ``lambda_{k-1}(K(G)) <= lambda_k(K(G\\e)) <= lambda_k(K(G))`` that the dual
    interlacing implies on the n x n spectra.
    """
    edges = list(G.edge_ids if edges is None else edges)
    deleted = [delete_edges(G, {e}) for e in edges]
    KG, KsG = kirchhoff_laplacian(G), dual_kirchhoff_laplacian(G)
    specs = spectra([KG, KsG] + [kirchhoff_laplacian(H) for H in deleted] + [dual_kirchhoff_laplacian(H) for H in deleted])
    specKG, specKsG = specs[0], specs[1]
    specKH, specKsH = specs[2 : 2 + len(edges)], specs[2 + len(edges) :]

    n = G.n
    reports = []
    for e, sKH, sKsH in zip(edges, specKH, specKsH):
        tol_used = scaled_tolerance(tol, specKG, sKH, specKsG)
        stated = tuple(
            _bounded(k, sKH.lam(k), specKG.lam(k), specKG.lam(k + 1), tol_used) for k in range(1, n)
        )
        dual = check_shifted_interlacing(specKsG, sKsH, 0, 1, tol_used, Theorem.CAUCHY_EDGE_K)
        downdate = tuple(
            _bounded(k, sKH.lam(k), specKG.lam(k - 1) if k > 1 else None, specKG.lam(k), tol_used)
            for k in range(1, n + 1)
        )
        reports.append(
            InterlacingReport(
                Theorem.CAUCHY_EDGE_K,
                stated,
                tol_used,
                PerturbationSpec("edge", edges=(e,)),
                () if stated else ("range empty",),
                label="stated chain on K",
                companions=(
                    InterlacingReport(Theorem.CAUCHY_EDGE_K, dual.checks, tol_used, notes=dual.notes,
                                      label="dual mechanism on K*"),
                    InterlacingReport(Theorem.CAUCHY_EDGE_K, downdate, tol_used,
                                      label="rank-one downdate chain on K"),
                ),
            )
        )
    return reports


def verify_edge_deletion_kirchhoff(G: Hypergraph, e: str, tol: float = DEFAULT_TOL) -> InterlacingReport:
    return verify_edge_deletions_kirchhoff(G, [e], tol)[0]


# -- edge-set deletion, adjacency and normalized Laplacian -------------------


def verify_edge_sets(
    G: Hypergraph, Fs: Sequence[Iterable[str]], operator: str, tol: float = DEFAULT_TOL
) -> list[InterlacingReport]:
    """Edge-set interlacing; ``t`` is the number of vertices touched by ``F``.

    A: ``lambda_{k-t+1}(A(G)) <= lambda_k(A(G\\F)) <= lambda_{k+t-1}(A(G))`` for k in t..n-t+1.
    L: ``lambda_{k-t}(L(G)) <= lambda_k(L(G\\F)) <= lambda_{k+t}(L(G))`` for k in t+1..n-t.
    """
    if operator not in EDGESET_THEOREMS:
        raise ValueError(f"edge-set deletion is verified for A and L; got {operator!r}")
    build = _operator(operator)
    Fs = [tuple(dict.fromkeys(F)) for F in Fs]
    deleted, ts = [], []
    for F in Fs:
        if not F:
            raise PreconditionError("edge set F must be nonempty")
        t = restrict(G, F).n
        H = delete_edges(G, F)
        if operator == "A" and t == 0:
            raise PreconditionError("F touches no vertices; the adjacency bound needs t >= 1")
        if operator == "L":
            _require_no_isolated(G, H)
        deleted.append(H)
        ts.append(t)
    specG, *specs = spectra([build(G)] + [build(H) for H in deleted])
    reports = []
    for F, t, specH in zip(Fs, ts, specs):
        shift = t - 1 if operator == "A" else t
        tol_used = scaled_tolerance(tol, specG, specH)
        base = check_shifted_interlacing(specG, specH, shift, shift, tol_used, EDGESET_THEOREMS[operator])
        reports.append(
            InterlacingReport(base.theorem, base.checks, tol_used, PerturbationSpec("edge_set", edges=F, t=t), base.notes)
        )
    return reports


def verify_edge_set(G: Hypergraph, F: Iterable[str], operator: str, tol: float = DEFAULT_TOL) -> InterlacingReport:
    return verify_edge_sets(G, [F], operator, tol)[0]


# -- Butler-type lower bound, normalized Laplacian ---------------------------


def verify_butler_many(G: Hypergraph, Fs: Sequence[Iterable[str]], tol: float = DEFAULT_TOL) -> list[InterlacingReport]:
    """``lambda_{k-t+|F|}(L(G)) <= lambda_k(L(G\\F))`` with ``t`` the summed edge cardinality.

    Every edge of ``F`` must have at least two vertices. For a single edge of
    cardinality ``t`` the shift is ``t - 1``.
    """
    Fs = [tuple(dict.fromkeys(F)) for F in Fs]
    deleted, ts = [], []
    _require_no_isolated(G)
    for F in Fs:
        small = [eid for eid in F if G.edge(eid).cardinality < 2]
        if small:
            raise PreconditionError(f"edges of cardinality < 2 in F: {', '.join(small)}")
        H = delete_edges(G, F)
        _require_no_isolated(H)
        deleted.append(H)
        ts.append(sum(G.edge(eid).cardinality for eid in F))
    build = OPERATORS["L"]
    specG, *specs = spectra([build(G)] + [build(H) for H in deleted])
    reports = []
    for F, t, specH in zip(Fs, ts, specs):
        shift = t - len(F)
        tol_used = scaled_tolerance(tol, specG, specH)
        checks = tuple(_bounded(k, specH.lam(k), specG.lam(k - shift), None, tol_used) for k in range(shift + 1, G.n + 1))
        reports.append(
            InterlacingReport(
                Theorem.BUTLER,
                checks,
                tol_used,
                PerturbationSpec("edge_set" if len(F) != 1 else "edge", edges=F, t=t),
                () if checks else ("range empty",),
            )
        )
    return reports


def verify_butler(G: Hypergraph, F: Iterable[str], tol: float = DEFAULT_TOL) -> InterlacingReport:
    return verify_butler_many(G, [F], tol)[0]


# -- loop removal, normalized Laplacian --------------------------------------


def verify_loop_removals(G: Hypergraph, loops: Iterable[str] | None = None, tol: float = DEFAULT_TOL) -> list[InterlacingReport]:
    """Removing a loop pushes eigenvalues of L away from 1.

    For each k: ``lambda_k(L(G\\l)) >= lambda_k(L(G))`` when ``lambda_k(L(G)) >= 1``
    and ``<=`` when ``lambda_k(L(G)) <= 1``. Within ``tol`` of 1 either
    direction is accepted.
    """
    if loops is None:
        loops = [e.id for e in G.edges if e.cardinality == 1]
    loops = list(loops)
    _require_no_isolated(G)
    deleted = []
    for eid in loops:
        if G.edge(eid).cardinality != 1:
            raise PreconditionError(f"edge {eid!r} is not a loop")
        H = delete_edges(G, {eid})
        _require_no_isolated(H)
        deleted.append(H)
    build = OPERATORS["L"]
    specG, *specs = spectra([build(G)] + [build(H) for H in deleted])
    reports = []
    for eid, specH in zip(loops, specs):
        tol_used = scaled_tolerance(tol, specG, specH)
        checks = []
        for k in range(1, G.n + 1):
            before, after = specG.lam(k), specH.lam(k)
            if before >= 1 + tol_used:
                checks.append(_bounded(k, after, before, None, tol_used, "above 1"))
            elif before <= 1 - tol_used:
                checks.append(_bounded(k, after, None, before, tol_used, "below 1"))
            else:
                checks.append(Check(k, after, label="at 1"))
        reports.append(InterlacingReport(Theorem.LOOP_L, tuple(checks), tol_used, PerturbationSpec("loop", edges=(eid,), t=1)))
    return reports


def verify_loop_removal(G: Hypergraph, loop: str, tol: float = DEFAULT_TOL) -> InterlacingReport:
    return verify_loop_removals(G, [loop], tol)[0]


# -- trace identities --------------------------------------------------------


def verify_trace_identities(G: Hypergraph, tol: float = DEFAULT_TOL) -> InterlacingReport:
    """Eigenvalue sums: 0 for A, n for L, total degree for K.

    Accepted within ``tol * max(1, total degree)``. The L identity is skipped,
    with a note, when ``G`` has isolated vertices.
    """
    total_degree = float(degrees(G).sum())
    tol_used = tol * max(1.0, total_degree)
    isolated = G.isolated_vertices()
    names = ["A", "K"] if isolated else ["A", "K", "L"]
    expected = {"A": 0.0, "K": total_degree, "L": float(G.n)}
    specs = spectra([OPERATORS[name](G) for name in names])
    checks = tuple(
        _bounded(i + 1, float(s.values.sum()), expected[name], expected[name], tol_used, f"sum spec {name}")
        for i, (name, s) in enumerate(zip(names, specs))
    )
    notes = (f"L identity skipped: isolated vertices {', '.join(isolated)}",) if isolated else ()
    return InterlacingReport(Theorem.TRACES, checks, tol_used, notes=notes)
