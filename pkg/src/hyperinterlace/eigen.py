"""Dense symmetric eigensolver and spectrum helpers.

The solver is a cyclic Jacobi method in round-robin (tournament) order: every
round rotates ``n // 2`` disjoint index pairs at once, so a sweep over all
``n (n - 1) / 2`` pairs costs ``n - 1`` vectorized row/column updates. A stack
of equal-size matrices shares one schedule, which amortizes numpy call
overhead when many small operators are decomposed together.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .exceptions import ConvergenceError

OFF_DIAGONAL_RTOL = 1e-13
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order, with multiplicity."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise ValueError("spectrum values must be a finite 1-d array")
        if np.any(np.diff(values) < 0):
            raise ValueError("spectrum values must be ascending")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return self.dim

    def lam(self, k: int) -> float:
        """Eigenvalue ``lambda_k`` with 1-based ``k``."""
        if not 1 <= k <= self.dim:
            raise IndexError(f"lambda_{k} out of range for dimension {self.dim}")
        return float(self.values[k - 1])

    @property
    def radius(self) -> float:
        return float(np.max(np.abs(self.values), initial=0.0))

    def tolist(self) -> list[float]:
        return self.values.tolist()


@dataclass(frozen=True)
class EigenDecomposition:
    spectrum: Spectrum
    vectors: np.ndarray
    sweeps: int = 0


@lru_cache(maxsize=None)
def _schedule(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin pairing of 0..n-1: each pair appears exactly once per sweep."""
    players = list(range(n + (n % 2)))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        p = np.array([a for a, _ in pairs], dtype=np.intp)
        q = np.array([b for _, b in pairs], dtype=np.intp)
        rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norms(A: np.ndarray) -> np.ndarray:
    off = A.copy()
    idx = np.arange(A.shape[-1])
    off[:, idx, idx] = 0.0
    return np.linalg.norm(off, axis=(1, 2))


def _check_symmetric(A: np.ndarray) -> None:
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise ValueError(f"expected square matrices, got shape {A.shape[1:]}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(A, np.swapaxes(A, 1, 2)):
        raise ValueError("matrix is not exactly symmetric; symmetrize it first")


def symmetric_spectra(stack, max_sweeps: int = MAX_SWEEPS) -> list[EigenDecomposition]:
    """Decompose a stack of same-size symmetric matrices in one batched Jacobi run.

    Each matrix is iterated until its off-diagonal Frobenius norm drops below
    ``1e-13 * max(1, ||M||_F)``; matrices that converge early keep receiving
    near-identity rotations until the whole stack is done, so results can
    differ from one-at-a-time solves in the last few ulps.
    """
    A = np.array(stack, dtype=float)
    if A.ndim == 2:
        A = A[None]
    _check_symmetric(A)
    B, n, _ = A.shape
    V = np.broadcast_to(np.eye(n), (B, n, n)).copy()
    idx = np.arange(n)
    if n <= 1 or B == 0:
        return [EigenDecomposition(Spectrum(A[b, idx, idx]), V[b]) for b in range(B)]

    threshold = OFF_DIAGONAL_RTOL * np.maximum(1.0, np.linalg.norm(A, axis=(1, 2)))
    rounds = _schedule(n)
    sweeps = 0
    while np.any(_off_norms(A) > threshold):
        if sweeps == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p, q in rounds:
            apq = A[:, p, q]
            if not apq.any():
                continue
            diag = A[:, idx, idx]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = (diag[:, q] - diag[:, p]) / (2.0 * apq)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(apq == 0.0, 0.0, t)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            # A <- J^T A J with J = [[c, s], [-s, c]] on each (p, q) block
            rp, rq = A[:, p, :], A[:, q, :]
            A[:, p, :] = c[..., None] * rp - s[..., None] * rq
            A[:, q, :] = s[..., None] * rp + c[..., None] * rq
            cs, ss = c[:, None, :], s[:, None, :]
            cp, cq = A[:, :, p], A[:, :, q]
            A[:, :, p] = cp * cs - cq * ss
            A[:, :, q] = cp * ss + cq * cs
            A[:, p, q] = 0.0
            A[:, q, p] = 0.0
            vp, vq = V[:, :, p], V[:, :, q]
            V[:, :, p] = vp * cs - vq * ss
            V[:, :, q] = vp * ss + vq * cs
        A = (A + np.swapaxes(A, 1, 2)) / 2
        sweeps += 1

    out = []
    for b in range(B):
        values = A[b, idx, idx]
        order = np.argsort(values, kind="stable")
        out.append(EigenDecomposition(Spectrum(values[order]), V[b][:, order], sweeps))
    return out


def symmetric_spectrum(M, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Full eigendecomposition of one real symmetric matrix (ascending eigenvalues)."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    return symmetric_spectra(M[None], max_sweeps)[0]


def spectrum(M) -> Spectrum:
    return symmetric_spectrum(M).spectrum


def spectra(matrices: Sequence[np.ndarray]) -> list[Spectrum]:
    """Spectra of many symmetric matrices, batching together those of equal size."""
    matrices = [np.asarray(M, dtype=float) for M in matrices]
    out: list[Spectrum | None] = [None] * len(matrices)
    by_size: dict[int, list[int]] = {}
    for i, M in enumerate(matrices):
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {M.shape}")
        by_size.setdefault(M.shape[0], []).append(i)
    for members in by_size.values():
        for i, dec in zip(members, symmetric_spectra(np.stack([matrices[i] for i in members]))):
            out[i] = dec.spectrum
    return out


def rayleigh_quotient(M, x) -> float:
    """``x^T M x / x^T x``."""
    M = np.asarray(M, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.shape != (M.shape[0],):
        raise ValueError(f"vector of shape {x.shape} does not match matrix {M.shape}")
    xx = float(x @ x)
    if xx == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(x @ M @ x) / xx


def _values(S) -> np.ndarray:
    return np.asarray(S.values if isinstance(S, Spectrum) else S, dtype=float)


def multiset_equal(S1: Spectrum | Sequence[float], S2: Spectrum | Sequence[float], tol: float) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b = np.sort(_values(S1)), np.sort(_values(S2))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))


def nonzero_eigenvalues(S: Spectrum | Sequence[float], tol: float) -> np.ndarray:
    """Eigenvalues with ``|lambda| > tol * max(1, max |lambda|)``, order preserved."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    values = _values(S)
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    return values[np.abs(values) > tol * scale]


def trace(M) -> float:
    return float(np.trace(np.asarray(M, dtype=float)))
