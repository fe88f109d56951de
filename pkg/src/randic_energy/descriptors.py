"""Graph energy, vertex and edge energies, Randić index, adjacent-pair witness.

Every spectral function takes an optional precomputed ``spectrum`` so a
caller that needs several descriptors of one graph decomposes it once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .spectral import (EigenDecomposition, adjacency_matrix, graph_spectrum,
                       matrix_abs, zero_threshold)


@dataclass(frozen=True, eq=False)
class VertexEnergyProfile:
    per_vertex: np.ndarray
    total: float

    def __post_init__(self):
        self.per_vertex.flags.writeable = False


@dataclass(frozen=True)
class EdgeEnergyProfile:
    per_edge: dict[tuple[int, int], float]
    total: float


@dataclass(frozen=True)
class WitnessPair:
    """Inner product and squared norms of the two Cauchy-Schwarz vectors."""

    inner: float
    norm_sq_v: float
    norm_sq_w: float


def _spectrum(g: Graph, spectrum: EigenDecomposition | None) -> EigenDecomposition:
    return graph_spectrum(g) if spectrum is None else spectrum


def vertex_energies_spectral(g: Graph, spectrum: EigenDecomposition | None = None) -> VertexEnergyProfile:
    """``E(v_i) = sum_j u_ij**2 * |lambda_j|``."""
    d = _spectrum(g, spectrum)
    per = d.weights @ np.abs(d.eigenvalues)
    return VertexEnergyProfile(per, float(per.sum()))


def vertex_energies_abs(g: Graph, spectrum: EigenDecomposition | None = None) -> VertexEnergyProfile:
    """Diagonal of ``|A|`` formed as a full matrix product."""
    per = np.diag(matrix_abs(_spectrum(g, spectrum))).copy()
    return VertexEnergyProfile(per, float(per.sum()))


def graph_energy(g: Graph, spectrum: EigenDecomposition | None = None) -> float:
    return float(np.abs(_spectrum(g, spectrum).eigenvalues).sum())


def randic_index(g: Graph) -> float:
    deg = g.degrees()
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges)


def edge_energies(g: Graph, profile: VertexEnergyProfile | None = None) -> EdgeEnergyProfile:
    """``E(e) = E(v)/deg(v) + E(w)/deg(w)``; these sum to the graph energy."""
    if profile is None:
        profile = vertex_energies_spectral(g)
    e = profile.per_vertex
    deg = g.degrees()
    per_edge = {(u, v): float(e[u] / deg[u] + e[v] / deg[v]) for u, v in g.edges}
    return EdgeEnergyProfile(per_edge, math.fsum(per_edge.values()))


def cs_witness(g: Graph, i: int, j: int, spectrum: EigenDecomposition | None = None) -> WitnessPair:
    """Build ``v_k = u_ik sqrt|l_k|`` and ``w_k = u_jk sign(l_k) sqrt|l_k|``.

    ``<v, w>`` reproduces ``A[i, j]`` while ``|v|^2`` and ``|w|^2`` are the
    energies of ``i`` and ``j``, so Cauchy-Schwarz bounds their product
    below by ``A[i, j]**2``. ``sign(0)`` is taken as +1.
    """
    if i == j:
        raise ValueError("witness needs two distinct vertices")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"vertices ({i}, {j}) out of range for n={g.n}")
    d = _spectrum(g, spectrum)
    lam = d.eigenvalues
    root = np.sqrt(np.abs(lam))
    sign = np.where(lam < -zero_threshold(adjacency_matrix(g)), -1.0, 1.0)
    v = d.vectors[i] * root
    w = d.vectors[j] * sign * root
    return WitnessPair(float(v @ w), float(v @ v), float(w @ w))
