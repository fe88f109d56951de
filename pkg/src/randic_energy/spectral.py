"""Adjacency matrices, symmetric eigendecomposition and the matrix absolute value.

The eigensolver is a cyclic Jacobi iteration (row-major pivot order) run in a
numba kernel. It stops once the off-diagonal Frobenius norm drops below
``1e-12 * ||A||_F`` and gives up after 64 sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jacobi import jacobi_sweeps
from .graph import Graph

REL_TOL = 1e-12
MAX_SWEEPS = 64


class ConvergenceError(ArithmeticError):
    """Jacobi sweeps exhausted; ``residual`` is the remaining off-diagonal norm."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps "
                         f"(off-diagonal norm {residual:.3e})")


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.edges:
        idx = np.array(g.edges)
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """``A = vectors @ diag(eigenvalues) @ vectors.T``, eigenvalues descending."""

    eigenvalues: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0
    residual: float = 0.0

    @property
    def weights(self) -> np.ndarray:
        """Spectral weights ``p_ij = u_ij**2``; each row sums to one."""
        return self.vectors ** 2

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.eigenvalues) @ self.vectors.T


def eigendecompose(m: np.ndarray) -> EigenDecomposition:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")
    n = m.shape[0]
    if n == 0:
        return EigenDecomposition(np.zeros(0), np.zeros((0, 0)))
    work = np.array(m, order="C")
    tol = REL_TOL * np.linalg.norm(m)
    vectors, sweeps, off = jacobi_sweeps(work, tol, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(float(off), MAX_SWEEPS)
    values = np.diag(work).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    # largest-magnitude entry of each column made positive (first index on ties)
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.where(vectors[pivots, np.arange(n)] < 0, -1.0, 1.0)
    vectors = vectors * signs
    return EigenDecomposition(values, vectors, int(sweeps), float(off))


def graph_spectrum(g: Graph) -> EigenDecomposition:
    return eigendecompose(adjacency_matrix(g))


def matrix_abs(d: EigenDecomposition) -> np.ndarray:
    """``U diag(|lambda|) U^T``, symmetrised to remove rounding asymmetry."""
    x = (d.vectors * np.abs(d.eigenvalues)) @ d.vectors.T
    return 0.5 * (x + x.T)


def zero_threshold(m: np.ndarray) -> float:
    """Eigenvalues below this magnitude count as exactly zero for sign purposes."""
    return REL_TOL * max(1.0, float(np.linalg.norm(m)))
