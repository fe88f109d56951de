"""Components, regularity classes, complete-bipartite certificates, matchings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class ComponentPartition:
    assignment: tuple[int, ...]
    component_count: int

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return groups


def connected_components(g: Graph) -> ComponentPartition:
    """Label components; ids follow the smallest vertex they contain."""
    comp = [-1] * g.n
    count = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return ComponentPartition(tuple(comp), count)


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(vertices), edges)


def two_coloring(g: Graph, vertices: list[int]) -> Optional[dict[int, int]]:
    """BFS 2-colouring of the component holding ``vertices``; None if odd cycle."""
    if not vertices:
        return {}
    color = {vertices[0]: 0}
    queue = deque([vertices[0]])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    return color


def complete_bipartite_certificate(g: Graph, vertices: list[int]) -> Optional[tuple[int, int]]:
    """``(a, b)`` with ``a <= b`` if the component on ``vertices`` is K_{a,b}."""
    if len(vertices) < 2:
        return None
    color = two_coloring(g, vertices)
    if color is None:
        return None
    a = sum(1 for c in color.values() if c == 0)
    b = len(vertices) - a
    m = sum(g.degree(v) for v in vertices) // 2
    if a == 0 or b == 0 or m != a * b:
        return None
    return (min(a, b), max(a, b))


@dataclass(frozen=True)
class Regular:
    degree: int


@dataclass(frozen=True)
class BipartiteSemiRegular:
    """Side 1 holds the higher-degree vertices (``d1 > d2``)."""

    n1: int
    n2: int
    d1: int
    d2: int
    sides: tuple[int, ...]


@dataclass(frozen=True)
class Irregular:
    pass


@dataclass(frozen=True)
class StructuralClass:
    kind: Regular | BipartiteSemiRegular | Irregular
    # one entry per component, in component-id order; None where the component
    # is not complete bipartite (isolated vertices included)
    certificates: tuple[Optional[tuple[int, int]], ...]

    def label(self) -> str:
        k = self.kind
        if isinstance(k, Regular):
            return f"regular(d={k.degree})"
        if isinstance(k, BipartiteSemiRegular):
            return f"semiregular(n1={k.n1},n2={k.n2},d1={k.d1},d2={k.d2})"
        return "irregular"


def classify_structure(g: Graph) -> StructuralClass:
    parts = connected_components(g)
    certs = tuple(complete_bipartite_certificate(g, vs) for vs in parts.members())
    degs = g.degrees()
    distinct = sorted(set(degs))
    if len(distinct) <= 1:
        return StructuralClass(Regular(distinct[0] if distinct else 0), certs)
    if len(distinct) == 2:
        # with two distinct degrees, a valid side assignment must split by degree
        lo, hi = distinct
        if lo > 0 and all(degs[u] != degs[v] for u, v in g.edges):
            sides = tuple(1 if d == hi else 2 for d in degs)
            n1 = sides.count(1)
            kind = BipartiteSemiRegular(n1, g.n - n1, hi, lo, sides)
            return StructuralClass(kind, certs)
    return StructuralClass(Irregular(), certs)


def is_union_complete_bipartite(g: Graph) -> bool:
    """True iff every component with at least two vertices is some K_{a,b}."""
    for vs in connected_components(g).members():
        if len(vs) >= 2 and complete_bipartite_certificate(g, vs) is None:
            return False
    return True


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching via Edmonds' blossom algorithm.

    One BFS per exposed vertex; odd cycles are contracted through a base
    array. O(n^3). Returns edges ``(u, v)`` with ``u < v``, sorted.
    """
    n = g.n
    match = [-1] * n
    # greedy start; augmentation repairs any suboptimal choice
    for u, v in g.edges:
        if match[u] < 0 and match[v] < 0:
            match[u] = v
            match[v] = u
    for root in range(n):
        if match[root] >= 0 or not g.adjacency[root]:
            continue
        end, parent = _find_augmenting_path(g.adjacency, match, root)
        v = end
        while v >= 0:
            pv = parent[v]
            nv = match[pv]
            match[v] = pv
            match[pv] = v
            v = nv
    return sorted((u, match[u]) for u in range(n) if u < match[u])


def _find_augmenting_path(adj, match, root):
    """Return ``(end, parent)``; ``end`` is -1 when no augmenting path exists."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent
