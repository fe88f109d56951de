"""Graph generators and brute-force oracles that share no code with the main routes."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graph import Graph

MAX_ENUMERATION_N = 7
MAX_ORACLE_EDGES = 24


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs or pair_order(n)
    return Graph.from_edges(n, (p for k, p in enumerate(pairs) if mask >> k & 1))


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by increasing edge mask.

    Bit ``k`` of the mask selects the ``k``-th pair of :func:`pair_order`.
    ``start``/``stop`` restrict the mask range, for chunked sweeps.
    """
    check_enumeration_order(n)
    pairs = pair_order(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    return (graph_from_mask(n, mask, pairs) for mask in range(start, stop))


def check_enumeration_order(n: int) -> None:
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n}")


def count_labeled(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) from numpy's PCG64 (``default_rng(seed)``).

    One uniform draw per vertex pair, consumed in :func:`pair_order`; the pair
    is an edge when its draw is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    pairs = pair_order(n)
    draws = np.random.default_rng(seed).random(len(pairs))
    return Graph.from_edges(n, (pr for pr, x in zip(pairs, draws) if x < p))


def oracle_matching(g: Graph) -> int:
    """Maximum matching size by depth-first search over edge subsets."""
    edges = g.edges
    if len(edges) > MAX_ORACLE_EDGES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_EDGES} edges, got {len(edges)}")
    m = len(edges)
    best = 0

    def search(k: int, used: int, size: int, free: int) -> None:
        nonlocal best
        if size > best:
            best = size
        # prune: cannot beat best with the edges or free vertices left
        if size + min(m - k, free // 2) <= best:
            return
        for i in range(k, m):
            u, v = edges[i]
            if not (used >> u & 1 or used >> v & 1):
                search(i + 1, used | (1 << u) | (1 << v), size + 1, free - 2)

    search(0, 0, 0, g.n)
    return best


class NewtonSchulzError(ArithmeticError):
    pass


def oracle_matrix_abs(g: Graph, tol: float = 1e-14, max_iter: int = 100) -> np.ndarray:
    """``(A A)^{1/2}`` by the coupled Newton-Schulz iteration, no eigensolver.

    ``A A`` is scaled by ``maxdeg**2``, which bounds its spectral radius, so
    every eigenvalue of the scaled matrix lies in [0, 1] and the iteration
    converges.
    """
    n = g.n
    if n > 16:
        raise ValueError(f"oracle limited to n <= 16, got {n}")
    a = np.zeros((n, n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    b = a @ a
    scale = float(max(g.degrees(), default=0)) ** 2
    if scale == 0.0:
        return np.zeros((n, n))
    eye = np.eye(n)
    y = b / scale
    z = eye.copy()
    target = y.copy()
    for _ in range(max_iter):
        t = 0.5 * (3.0 * eye - z @ y)
        y, z = y @ t, t @ z
        if np.abs(y @ y - target).max() <= tol:
            break
    else:
        raise NewtonSchulzError(f"no convergence in {max_iter} iterations")
    x = np.sqrt(scale) * y
    return 0.5 * (x + x.T)
