"""Graph energy against twice the Randić index on a few families.

Run: python demos/02_energy_vs_randic.py
"""
from randic_energy import (complete_bipartite_graph, complete_graph, cycle_graph,
                           full_report, path_graph, petersen_graph, random_gnp,
                           star_graph)

graphs = {
    "P_6": path_graph(6),
    "C_5": cycle_graph(5),
    "C_6": cycle_graph(6),
    "K_5": complete_graph(5),
    "K_{2,3}": complete_bipartite_graph(2, 3),
    "K_{1,5}": star_graph(5),
    "Petersen": petersen_graph(),
    "G(12, 0.3)": random_gnp(12, 0.3, seed=2),
}

print(f"{'graph':<11} {'E':>10} {'2R':>10} {'gap':>10}  class")
for name, g in graphs.items():
    r = full_report(g)
    print(f"{name:<11} {r.energy:10.6f} {r.twice_randic:10.6f} {r.gap:10.6f}  "
          f"{r.energy_class.value}")

# Complete bipartite graphs close the gap; everything else stays strictly above.
