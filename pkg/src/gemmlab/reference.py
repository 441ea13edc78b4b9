"""Trusted baselines: naive GEMM, textbook LU, and reproducible test matrices.

Nothing here shares code with the blocked paths it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numba import njit

KINDS = ("uniform", "integer", "identity", "zero", "rank-deficient")


@dataclass(frozen=True)
class TestMatrixSpec:
    kind: str
    seed: int
    rows: int
    cols: int

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown matrix kind {self.kind!r}; expected one of {KINDS}")
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")


def gen_matrix(spec: TestMatrixSpec) -> np.ndarray:
    """Column-major float64 matrix determined entirely by ``spec``.

    ``integer`` draws from {-4, ..., 4}, so short sums of products are exact.
    """
    m, n = spec.rows, spec.cols
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "uniform":
        x = rng.uniform(-1.0, 1.0, size=(m, n))
    elif spec.kind == "integer":
        x = rng.integers(-4, 5, size=(m, n)).astype(np.float64)
    elif spec.kind == "identity":
        x = np.eye(m, n)
    elif spec.kind == "zero":
        x = np.zeros((m, n))
    else:
        r = max(1, min(m, n) // 2)
        x = rng.uniform(-1.0, 1.0, size=(m, r)) @ rng.uniform(-1.0, 1.0, size=(r, n))
    return np.asfortranarray(x, dtype=np.float64)


@njit(cache=True)
def _oracle_gemm(alpha, a, b, beta, c):
    m, k = a.shape
    n = b.shape[1]
    for i in range(m):
        for j in range(n):
            s = 0.0
            for p in range(k):
                s += a[i, p] * b[p, j]
            if beta == 0.0:
                c[i, j] = alpha * s
            else:
                c[i, j] = beta * c[i, j] + alpha * s


def oracle_gemm(alpha: float, a: np.ndarray, b: np.ndarray, beta: float, c: np.ndarray) -> None:
    """C := alpha*A*B + beta*C by a plain i-j-p triple loop."""
    if a.ndim != 2 or b.ndim != 2 or c.ndim != 2:
        raise ValueError("oracle_gemm operates on 2-D arrays")
    if a.shape[1] != b.shape[0] or c.shape != (a.shape[0], b.shape[1]):
        raise ValueError(f"non-conformal shapes A{a.shape} B{b.shape} C{c.shape}")
    _oracle_gemm(float(alpha), a, b, float(beta), c)


def oracle_lu(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Unblocked LU with partial pivoting; returns ``(L, U, pivots)``.

    ``pivots[j]`` is the row exchanged with row j at step j (0-based ipiv).
    Ties in the pivot search go to the smallest row index. A zero pivot
    leaves its column of L at zero below the diagonal.
    """
    a = np.array(a, dtype=np.float64)
    s = a.shape[0]
    if a.shape != (s, s):
        raise ValueError("oracle_lu needs a square matrix")
    pivots = np.arange(s)
    for j in range(s):
        col = np.abs(a[j:, j])
        piv = j + int(np.argmax(col)) if col.size else j
        pivots[j] = piv
        if piv != j:
            a[[j, piv], :] = a[[piv, j], :]
        if a[j, j] != 0.0:
            a[j + 1:, j] /= a[j, j]
            a[j + 1:, j + 1:] -= np.outer(a[j + 1:, j], a[j, j + 1:])
    lower = np.tril(a, -1) + np.eye(s)
    upper = np.triu(a)
    return lower, upper, pivots


def permute_rows(a: np.ndarray, pivots) -> np.ndarray:
    """Apply an ipiv sequence to the rows of a copy of ``a``."""
    pa = np.array(a, dtype=np.float64, order="F")
    for j, p in enumerate(pivots):
        if p != j:
            pa[[j, p], :] = pa[[p, j], :]
    return pa


def gemm_error_bound(alpha: float, a: np.ndarray, b: np.ndarray, beta: float,
                     c0: np.ndarray) -> np.ndarray:
    """Elementwise bound 4*k*eps*(|alpha| |A||B| + |beta C0|) on a GEMM result's error."""
    k = a.shape[1]
    eps = np.finfo(np.float64).eps
    return 4 * max(k, 1) * eps * (abs(alpha) * (np.abs(a) @ np.abs(b)) + np.abs(beta * c0))
