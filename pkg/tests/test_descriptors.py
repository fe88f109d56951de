import math

import numpy as np
import pytest
from hypothesis import given, settings

from randic_energy.descriptors import (cs_witness, edge_energies, graph_energy,
                                       randic_index, vertex_energies_abs,
                                       vertex_energies_spectral)
from randic_energy.graph import (circulant_graph, complete_bipartite_graph,
                                 complete_graph, cycle_graph, disjoint_union,
                                 empty_graph, path_graph, star_graph)
from randic_energy.oracles import random_gnp
from randic_energy.structure import connected_components, induced_subgraph

from conftest import all_graphs
from test_graph import graphs

R2 = math.sqrt(2.0)
R5 = math.sqrt(5.0)

VERTEX_CASES = [
    (path_graph(3), [R2 / 2, R2, R2 / 2]),
    (complete_graph(2), [1.0, 1.0]),
    (star_graph(4), [2.0, 0.5, 0.5, 0.5, 0.5]),
    (complete_graph(4), [1.5] * 4),
    (empty_graph(4), [0.0] * 4),
]


@pytest.mark.parametrize("g, expected", VERTEX_CASES)
@pytest.mark.parametrize("route", [vertex_energies_spectral, vertex_energies_abs])
def test_vertex_energy_examples(route, g, expected):
    prof = route(g)
    assert np.abs(prof.per_vertex - expected).max() <= 1e-12
    assert abs(prof.total - sum(expected)) <= 1e-12


def test_profile_is_read_only():
    prof = vertex_energies_spectral(path_graph(3))
    with pytest.raises(ValueError):
        prof.per_vertex[0] = 1.0


@pytest.mark.parametrize("g, energy", [
    (complete_bipartite_graph(3, 3), 6.0),
    (path_graph(4), 2 * R5),
    (empty_graph(1), 0.0),
    (cycle_graph(5), 2 + 2 * R5),  # spectrum 2, 2cos(2pi/5) twice, 2cos(4pi/5) twice
    (complete_graph(6), 10.0),
])
def test_graph_energy(g, energy):
    assert abs(graph_energy(g) - energy) <= 1e-12


@pytest.mark.parametrize("g, r", [
    (complete_bipartite_graph(2, 3), math.sqrt(6)),
    (path_graph(4), R2 + 0.5),
    (empty_graph(3), 0.0),
    (cycle_graph(7), 3.5),
    (complete_graph(5), 2.5),
    (circulant_graph(9, [1, 3]), 4.5),
])
def test_randic(g, r):
    assert abs(randic_index(g) - r) <= 1e-12


def test_edge_energy_examples():
    assert edge_energies(complete_graph(2)).per_edge == pytest.approx({(0, 1): 2.0}, abs=1e-12)
    p3 = edge_energies(path_graph(3))
    assert all(abs(x - R2) <= 1e-12 for x in p3.per_edge.values())
    assert abs(p3.total - 2 * R2) <= 1e-12
    star = edge_energies(star_graph(4))
    assert all(abs(x - 1.0) <= 1e-12 for x in star.per_edge.values())
    assert abs(star.total - 4.0) <= 1e-12


def test_witness_examples():
    w = cs_witness(complete_graph(2), 0, 1)
    assert (w.inner, w.norm_sq_v, w.norm_sq_w) == pytest.approx((1, 1, 1), abs=1e-12)
    p3 = path_graph(3)
    assert abs(cs_witness(p3, 0, 2).inner) <= 1e-12
    w = cs_witness(p3, 0, 1)
    assert (w.inner, w.norm_sq_v, w.norm_sq_w) == pytest.approx((1, R2 / 2, R2), abs=1e-12)
    with pytest.raises(ValueError):
        cs_witness(p3, 1, 1)


def test_route_equivalence_and_trace_identity():
    for g in all_graphs(5):
        s = vertex_energies_spectral(g)
        a = vertex_energies_abs(g)
        assert np.abs(s.per_vertex - a.per_vertex).max(initial=0) <= 1e-9
        e = graph_energy(g)
        assert abs(s.total - e) <= 1e-9
        assert abs(edge_energies(g, s).total - e) <= 1e-9
        assert s.per_vertex.min(initial=0) >= -1e-12
        for v in range(g.n):
            if g.degree(v) == 0:
                assert abs(s.per_vertex[v]) <= 1e-10


@pytest.mark.parametrize("n", [7, 8])
def test_route_equivalence_sampled(n):
    for seed in range(40):
        g = random_gnp(n, 0.2 + 0.6 * (seed % 5) / 4, seed)
        s = vertex_energies_spectral(g).per_vertex
        a = vertex_energies_abs(g).per_vertex
        assert np.abs(s - a).max() <= 1e-9


@settings(max_examples=60)
@given(graphs(max_n=9))
def test_component_additivity(g):
    whole = vertex_energies_spectral(g).per_vertex
    parts = connected_components(g).members()
    energy = randic = 0.0
    for vs in parts:
        h = induced_subgraph(g, vs)
        per = vertex_energies_spectral(h).per_vertex
        assert np.abs(whole[vs] - per).max() <= 1e-9
        energy += graph_energy(h)
        randic += randic_index(h)
    assert abs(graph_energy(g) - energy) <= 1e-9
    assert abs(randic_index(g) - randic) <= 1e-9


@settings(max_examples=60)
@given(graphs(max_n=9))
def test_witness_consistency(g):
    e = vertex_energies_spectral(g).per_vertex
    for u, v in g.edges:
        w = cs_witness(g, u, v)
        assert abs(w.inner - 1.0) <= 1e-9
        assert w.inner ** 2 <= w.norm_sq_v * w.norm_sq_w + 1e-9
        assert abs(w.norm_sq_v - e[u]) <= 1e-9 and abs(w.norm_sq_w - e[v]) <= 1e-9
        assert e[u] * e[v] >= 1 - 1e-8
