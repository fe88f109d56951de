"""Exhaustive verification over all labelled graphs on up to six vertices.

Run: python demos/04_exhaustive_sweep.py
The same sweep is available as ``randic-energy sweep --n 6``.
"""
import time

from randic_energy import sweep

for n in range(1, 7):
    t0 = time.perf_counter()
    s = sweep(n)
    gap = "-" if s.min_strict_gap is None else f"{s.min_strict_gap:.6f}"
    print(f"n={n}: {s.graphs_checked:6d} graphs, {s.violations} violations, "
          f"{s.equality_count:4d} equality cases, smallest strict gap {gap} "
          f"({time.perf_counter() - t0:.1f}s)")
