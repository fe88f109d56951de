"""Graph energy, vertex energy and the Randić index, with exhaustive checks of
the inequality ``E(G) >= 2 R(G)`` and its equality case."""

from .descriptors import (EdgeEnergyProfile, VertexEnergyProfile, WitnessPair,
                          cs_witness, edge_energies, graph_energy, randic_index,
                          vertex_energies_abs, vertex_energies_spectral)
from .formats import (GraphParseError, parse_edge_list, parse_graph6,
                      parse_graph6_lines, to_edge_list, to_graph6)
from .graph import (Graph, complete_bipartite_graph, complete_graph, cycle_graph,
                    disjoint_union, empty_graph, path_graph, petersen_graph,
                    star_graph)
from .oracles import (enumerate_labeled, oracle_matching, oracle_matrix_abs,
                      random_gnp)
from .spectral import (ConvergenceError, EigenDecomposition, adjacency_matrix,
                       eigendecompose, matrix_abs)
from .structure import (ComponentPartition, StructuralClass, classify_structure,
                        connected_components, is_union_complete_bipartite,
                        maximum_matching)
from .exhaustive import SweepSummary, sweep
from .verify import (EQUALITY_TOL, SLACK_TOL, DescriptorReport, EnergyClass,
                     check_equality_case, check_main_inequality,
                     check_matching_bound, check_regular_bound,
                     check_semiregular_bound, check_vertex_inequalities,
                     classify_energy, full_report)

__version__ = "0.1.0"
