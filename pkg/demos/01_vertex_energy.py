"""Vertex energies of small graphs, computed two ways.

Run: python demos/01_vertex_energy.py
"""
import numpy as np

from randic_energy import (graph_energy, path_graph, star_graph, complete_graph,
                           vertex_energies_abs, vertex_energies_spectral,
                           edge_energies)

np.set_printoptions(precision=6, suppress=True)

# The energy of a vertex is the diagonal entry of |A|. The spectral route
# weights each |eigenvalue| by the squared eigenvector entries instead.
for name, g in [("P_3", path_graph(3)), ("K_{1,4}", star_graph(4)), ("K_4", complete_graph(4))]:
    spectral = vertex_energies_spectral(g)
    direct = vertex_energies_abs(g)
    print(f"{name}: spectral route {spectral.per_vertex}")
    print(f"{' ' * len(name)}  |A| diagonal    {direct.per_vertex}")
    print(f"{' ' * len(name)}  total {spectral.total:.6f} = graph energy {graph_energy(g):.6f}")

# Splitting each vertex energy evenly over its edges gives edge energies,
# which again add up to the graph energy.
ee = edge_energies(star_graph(4))
print("\nK_{1,4} edge energies:", {e: round(x, 6) for e, x in ee.per_edge.items()})
print("sum:", ee.total)
