"""Cyclic Jacobi kernel, compiled with numba."""

import numba
import numpy as np


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return np.sqrt(s)


@numba.njit(cache=True)
def jacobi_sweeps(a, tol, max_sweeps):
    """Diagonalise symmetric ``a`` in place.

    Returns ``(v, sweeps, off)`` where the columns of ``v`` are the
    eigenvectors of the original matrix and ``diag(a)`` its eigenvalues.
    ``sweeps`` is -1 if the off-diagonal norm never dropped below ``tol``.
    """
    n = a.shape[0]
    v = np.eye(n)
    off = _off_norm(a)
    sweeps = 0
    while off > tol:
        if sweeps == max_sweeps:
            return v, -1, off
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r != p and r != q:
                        arp = a[r, p]
                        arq = a[r, q]
                        x = c * arp - s * arq
                        y = s * arp + c * arq
                        a[r, p] = x
                        a[p, r] = x
                        a[r, q] = y
                        a[q, r] = y
                for r in range(n):
                    vrp = v[r, p]
                    vrq = v[r, q]
                    v[r, p] = c * vrp - s * vrq
                    v[r, q] = s * vrp + c * vrq
        off = _off_norm(a)
    return v, sweeps, off
