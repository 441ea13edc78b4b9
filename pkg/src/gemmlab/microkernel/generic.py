"""Portable micro-kernel usable for any (m_r, n_r)."""

import numpy as np
from numba import njit


@njit(nogil=True, cache=True)
def kernel_generic(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    acc = np.zeros((mr, nr))
    for p in range(kc):
        pa = ao + p * mr
        pb = bo + p * nr
        for i in range(mr):
            ai = a[pa + i]
            for j in range(nr):
                acc[i, j] += ai * b[pb + j]
    if beta == 0.0:
        for j in range(nr):
            for i in range(mr):
                c[ci + i, cj + j] = alpha * acc[i, j]
    else:
        for j in range(nr):
            for i in range(mr):
                c[ci + i, cj + j] = beta * c[ci + i, cj + j] + alpha * acc[i, j]
