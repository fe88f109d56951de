"""Which graphs have E(G) = 2R(G)?

Run: python demos/03_equality_case.py
"""
from collections import Counter

from randic_energy import check_equality_case, enumerate_labeled, to_graph6

# Tally the numeric test |E - 2R| <= 1e-7 against the structural test
# "every nontrivial component is complete bipartite" on all graphs with 5 vertices.
tally = Counter()
examples = {}
for g in enumerate_labeled(5):
    r = check_equality_case(g)
    tally[(r.numeric, r.structural)] += 1
    examples.setdefault((r.numeric, r.structural), to_graph6(g))

for (numeric, structural), count in sorted(tally.items()):
    print(f"numeric={numeric!s:<5} structural={structural!s:<5} "
          f"{count:5d} graphs  e.g. {examples[numeric, structural]}")
# Only the diagonal combinations occur.
