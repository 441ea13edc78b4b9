"""Right-looking blocked LU with partial pivoting.

Each step of the outer loop (F1) over k in steps of b:

1. PFACT   factor the panel A(k:s, k:k+b) with the unblocked algorithm
2. swap    apply the panel's row interchanges left and right of the panel
3. TSOLVE  A(k:k+b, k+b:s) := L11^{-1} A(k:k+b, k+b:s)
4. GEMM    A(k+b:s, k+b:s) -= A(k+b:s, k:k+b) A(k:k+b, k+b:s)

A is overwritten by L (unit diagonal, not stored) and U.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from gemmlab.gemm import GemmContext, gemm
from gemmlab.pack import check_view
from gemmlab.reference import permute_rows


class FactorError(ValueError):
    pass


@dataclass
class LuResult:
    pivots: np.ndarray
    info: Optional[int] = None

    def __post_init__(self):
        if np.any(self.pivots < np.arange(len(self.pivots))):
            raise FactorError("pivots[j] must be >= j")


def pfact(panel: np.ndarray, pivot_out: np.ndarray) -> Optional[int]:
    """Unblocked LU with partial pivoting of a tall panel, in place.

    ``pivot_out[j]`` receives the panel row swapped with row j. Returns the
    first column whose pivot is exactly zero, or None. Zero pivots are
    recorded and skipped, as in LAPACK's getrf.
    """
    rows, cols = panel.shape
    info = None
    for j in range(min(rows, cols)):
        piv = j + int(np.argmax(np.abs(panel[j:, j])))
        pivot_out[j] = piv
        if piv != j:
            panel[[j, piv], :] = panel[[piv, j], :]
        d = panel[j, j]
        if d == 0.0:
            if info is None:
                info = j
            continue
        panel[j + 1:, j] *= 1.0 / d
        if j + 1 < cols:
            panel[j + 1:, j + 1:] -= np.outer(panel[j + 1:, j], panel[j, j + 1:])
    return info


def apply_row_swaps(block: np.ndarray, pivots, offset: int = 0) -> None:
    """Swap row ``offset + i`` with row ``pivots[i]`` of ``block``, for ascending i."""
    rows = block.shape[0]
    for i, p in enumerate(pivots):
        r = offset + i
        if not (0 <= r < rows and 0 <= p < rows):
            raise IndexError(f"row swap {r}<->{p} out of range for {rows} rows")
        if p != r and block.shape[1]:
            block[[r, p], :] = block[[p, r], :]


def tsolve(l11: np.ndarray, a12: np.ndarray) -> None:
    """Overwrite ``a12`` with L11^{-1} a12, L11 unit lower triangular (strict part of ``l11``)."""
    b = l11.shape[0]
    if l11.shape != (b, b) or a12.shape[0] != b:
        raise FactorError(f"tsolve shapes do not conform: L11{l11.shape}, A12{a12.shape}")
    for i in range(b - 1):
        a12[i + 1:, :] -= np.outer(l11[i + 1:, i], a12[i, :])


def lu_blocked(a: np.ndarray, b: int, ctx: GemmContext, per_iteration: bool = True) -> LuResult:
    """Factor the square column-major matrix ``a`` in place; returns pivots and info.

    With model CCPs and ``ctx.hier`` set, the trailing GEMM CCPs are
    re-derived each iteration for its (s-k-b, s-k-b, b) shape; with
    ``per_iteration=False`` they are derived once for the first update.
    """
    a = check_view(a, "A")
    s = a.shape[0]
    if a.shape != (s, s):
        raise FactorError(f"lu_blocked needs a square matrix, got {a.shape}")
    if s and not 1 <= b <= s:
        raise FactorError(f"block size must satisfy 1 <= b <= s={s}, got {b}")
    pivots = np.arange(s, dtype=np.int64)
    info = None
    if not per_iteration and s > b:
        ctx = ctx.retarget(s - b, s - b, b)

    for k in range(0, s, b):
        bk = min(b, s - k)
        local = np.empty(bk, dtype=np.int64)
        linfo = pfact(a[k:, k:k + bk], local)
        if linfo is not None and info is None:
            info = k + linfo
        glob = local + k
        pivots[k:k + bk] = glob
        apply_row_swaps(a[:, :k], glob, offset=k)
        apply_row_swaps(a[:, k + bk:], glob, offset=k)

        t = s - k - bk
        if t == 0:
            continue
        tsolve(a[k:k + bk, k:k + bk], a[k:k + bk, k + bk:])
        step = ctx.retarget(t, t, bk) if per_iteration else ctx
        gemm(-1.0, a[k + bk:, k:k + bk], a[k:k + bk, k + bk:], 1.0, a[k + bk:, k + bk:], step)
    return LuResult(pivots, info)


def lu_residual(a_original: np.ndarray, lu: np.ndarray, pivots) -> float:
    """||P A - L U||_1 / (s * eps * ||A||_1) from an explicit reconstruction."""
    s = a_original.shape[0]
    if s == 0:
        return 0.0
    lower = np.tril(lu, -1) + np.eye(s)
    upper = np.triu(lu)
    r = np.linalg.norm(permute_rows(a_original, pivots) - lower @ upper, 1)
    scale = s * np.finfo(np.float64).eps * np.linalg.norm(a_original, 1)
    if scale == 0.0:
        return 0.0 if r == 0.0 else float("inf")
    return float(r / scale)
