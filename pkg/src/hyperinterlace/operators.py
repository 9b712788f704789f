"""Matrices attached to a hypergraph with real coefficients.

All builders return dense ``float64`` arrays indexed by vertex declaration
order (edges by edge order for the incidence and dual Kirchhoff matrices).

Pairwise products are accumulated edge by edge over each edge's support, with
one fixed summation order per entry. That makes ``K == D - A`` hold bit for
bit, and makes the operators of ``G \\ v`` coincide *exactly* with the
principal submatrices of those of ``G``.
"""

from __future__ import annotations

import numpy as np

from .exceptions import IsolatedVertexError
from .hypergraph import Hypergraph

#: diagonal entries of D below this are treated as isolated vertices
DEGREE_FLOOR = 1e-14
SYMMETRY_RTOL = 1e-12


def _support(G: Hypergraph):
    index = {v: i for i, v in enumerate(G.vertices)}
    for e in G.edges:
        idx = np.array([index[v] for v, _ in e.coefficients], dtype=np.intp)
        coeffs = np.array([c for _, c in e.coefficients], dtype=float)
        yield idx, coeffs


def symmetrize(M: np.ndarray) -> np.ndarray:
    """Return (M + M^T) / 2 after checking that M is symmetric up to rounding."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(M), initial=0.0)))
    if np.max(np.abs(M - M.T), initial=0.0) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    return (M + M.T) / 2


def degrees(G: Hypergraph) -> np.ndarray:
    d = np.zeros(G.n)
    for idx, c in _support(G):
        d[idx] += c * c
    return d


def degree_matrix(G: Hypergraph) -> np.ndarray:
    return np.diag(degrees(G))


def _pair_products(G: Hypergraph) -> np.ndarray:
    """Sum over edges of the outer product of each incidence column, diagonal included."""
    P = np.zeros((G.n, G.n))
    for idx, c in _support(G):
        P[np.ix_(idx, idx)] += np.outer(c, c)
    return P


def adjacency_matrix(G: Hypergraph) -> np.ndarray:
    """``A_ij = -sum_e C_ie C_je`` off the diagonal, zero on it."""
    # 0 - P rather than -P keeps structural zeros as +0.0
    A = 0.0 - _pair_products(G)
    np.fill_diagonal(A, 0.0)
    return symmetrize(A)


def incidence_matrix(G: Hypergraph) -> np.ndarray:
    I = np.zeros((G.n, G.m))
    for j, (idx, c) in enumerate(_support(G)):
        I[idx, j] = c
    return I


def kirchhoff_laplacian(G: Hypergraph) -> np.ndarray:
    """``K = I I^T``, summed as one outer product per incidence column."""
    return symmetrize(_pair_products(G))


def dual_kirchhoff_laplacian(G: Hypergraph) -> np.ndarray:
    """``K* = I^T I`` (m x m); an empty edge gives a zero row and column."""
    I = incidence_matrix(G)
    return symmetrize(I.T @ I)


def inverse_sqrt_degrees(G: Hypergraph) -> np.ndarray:
    d = degrees(G)
    bad = d < DEGREE_FLOOR
    if bad.any():
        raise IsolatedVertexError([v for v, flag in zip(G.vertices, bad) if flag])
    return 1.0 / np.sqrt(d)


def normalized_laplacian(G: Hypergraph) -> np.ndarray:
    """``L = id - D^{-1/2} A D^{-1/2}``; raises on isolated vertices."""
    s = inverse_sqrt_degrees(G)
    L = 0.0 - adjacency_matrix(G) * np.outer(s, s)
    np.fill_diagonal(L, 1.0)
    return symmetrize(L)


def random_walk_laplacian(G: Hypergraph) -> np.ndarray:
    """``id - D^{-1} A``; not symmetric in general, but similar to the normalized Laplacian."""
    inverse_sqrt_degrees(G)
    d = degrees(G)
    R = 0.0 - adjacency_matrix(G) / d[:, None]
    np.fill_diagonal(R, 1.0)
    return R


OPERATORS = {
    "A": adjacency_matrix,
    "K": kirchhoff_laplacian,
    "L": normalized_laplacian,
    "Kdual": dual_kirchhoff_laplacian,
}


def operator(G: Hypergraph, name: str) -> np.ndarray:
    try:
        build = OPERATORS[name]
    except KeyError:
        raise ValueError(f"unknown operator {name!r}; expected one of {sorted(OPERATORS)}") from None
    return build(G)
