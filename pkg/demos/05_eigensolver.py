"""The Jacobi eigensolver against LAPACK on a random graph.

Run: python demos/05_eigensolver.py
"""
import time

import numpy as np

from randic_energy import adjacency_matrix, eigendecompose, random_gnp

a = adjacency_matrix(random_gnp(200, 0.25, seed=0))
eigendecompose(a[:3, :3])  # compile the kernel outside the timing

t0 = time.perf_counter()
d = eigendecompose(a)
elapsed = time.perf_counter() - t0

print(f"n=200 decomposition: {elapsed:.2f}s, {d.sweeps} sweeps")
print("max |U D U^T - A|      :", np.abs(d.reconstruct() - a).max())
print("max |U^T U - I|        :", np.abs(d.vectors.T @ d.vectors - np.eye(200)).max())
print("max |lambda - eigvalsh|:", np.abs(d.eigenvalues - np.linalg.eigvalsh(a)[::-1]).max())
