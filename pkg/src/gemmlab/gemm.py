"""Five-loop blocked GEMM: C := alpha*A*B + beta*C.

    G1: jc over n in steps of n_c
      G2: pc over k in steps of k_c      pack B_c    (never parallel)
        G3: ic over m in steps of m_c    pack A_c
          G4: jr over n_c in steps of n_r
            G5: ir over m_c in steps of m_r   micro-kernel

G4 and G5 run inside the JIT-compiled macro-kernel of the selected
micro-kernel entry. With T > 1 workers either G3 or G4 is split; every C
element still sees the same sequence of floating-point operations, so the
result does not depend on T or on the loop chosen.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from gemmlab import ccp as _ccp
from gemmlab.ccp import CcpTriple
from gemmlab.hwdesc import CacheHierarchy
from gemmlab.microkernel import MicroKernelEntry
from gemmlab.pack import (
    a_capacity, aligned_empty, b_capacity, check_view, pack_a, pack_b,
)
from gemmlab.reference import oracle_gemm  # noqa: F401  (re-exported baseline)

PARALLEL_LOOPS = ("none", "g3", "g4")
# G2 carries a write-after-write dependency on C; it is not in PARALLEL_LOOPS.


class GemmError(ValueError):
    pass


@dataclass(frozen=True)
class GemmContext:
    """Kernel, CCPs and threading for a GEMM call.

    When ``hier`` is set, :meth:`retarget` re-derives model CCPs for a new
    problem shape (used by the LU driver as the trailing matrix shrinks).
    """

    kernel: MicroKernelEntry
    ccps: CcpTriple
    threads: int = 1
    parallel_loop: str = "none"
    hier: Optional[CacheHierarchy] = None

    def __post_init__(self):
        loop = self.parallel_loop.lower()
        object.__setattr__(self, "parallel_loop", loop)
        if loop not in PARALLEL_LOOPS:
            raise GemmError(f"parallel_loop must be one of {PARALLEL_LOOPS} (G2 is never parallel)")
        if self.threads < 1:
            raise GemmError(f"thread count must be >= 1, got {self.threads}")
        if self.threads > 1 and loop == "none":
            raise GemmError("threads > 1 requires parallel_loop g3 or g4")

    def retarget(self, m: int, n: int, k: int) -> "GemmContext":
        if self.hier is None or self.ccps.provenance == _ccp.STATIC or min(m, n, k) < 1:
            return self
        ccps = _ccp.ccps_for(self.ccps.provenance, self.hier, self.kernel.shape, m, n, k)
        return replace(self, ccps=ccps)


def _views_overlap(x: np.ndarray, y: np.ndarray) -> bool:
    if x.size == 0 or y.size == 0:
        return False
    return bool(np.shares_memory(x, y))


def _split(count: int, parts: int):
    """Contiguous [lo, hi) chunks of range(count), one per worker (some may be empty)."""
    q, r = divmod(count, parts)
    bounds = [0]
    for w in range(parts):
        bounds.append(bounds[-1] + q + (1 if w < r else 0))
    return list(zip(bounds[:-1], bounds[1:]))


def _run_all(pool, fn, chunks):
    """Fork-join: run ``fn(worker, lo, hi)`` on every non-empty chunk, then wait."""
    futures = [pool.submit(fn, w, lo, hi) for w, (lo, hi) in enumerate(chunks) if hi > lo]
    for f in futures:
        f.result()


def gemm(alpha: float, a: np.ndarray, b: np.ndarray, beta: float, c: np.ndarray,
         ctx: GemmContext) -> None:
    a = check_view(a, "A")
    b = check_view(b, "B")
    c = check_view(c, "C")
    m, k = a.shape
    if b.shape[0] != k or c.shape != (m, b.shape[1]):
        raise GemmError(f"dimension mismatch: A{a.shape} B{b.shape} C{c.shape}")
    n = b.shape[1]
    if _views_overlap(c, a) or _views_overlap(c, b):
        raise GemmError("C must not overlap A or B")
    if m == 0 or n == 0:
        return
    alpha, beta = float(alpha), float(beta)
    if k == 0:
        if beta == 0.0:
            c[:, :] = 0.0
        elif beta != 1.0:
            c *= beta
        return

    entry = ctx.kernel
    mr, nr = entry.m_r, entry.n_r
    mc_max = min(m, ctx.ccps.m_c)
    nc_max = min(n, ctx.ccps.n_c)
    kc_max = min(k, ctx.ccps.k_c)
    T = ctx.threads
    loop = ctx.parallel_loop if T > 1 else "none"

    # Workspace for the whole call; G3-parallel workers get private A_c buffers.
    b_buf = aligned_empty(b_capacity(kc_max, nc_max, nr))
    n_a = T if loop == "g3" else 1
    a_bufs = [aligned_empty(a_capacity(mc_max, kc_max, mr)) for _ in range(n_a)]
    macro = entry.macro

    pool = ThreadPoolExecutor(max_workers=T) if T > 1 else None
    try:
        for jc in range(0, n, nc_max):                                   # G1
            nc = min(nc_max, n - jc)
            npanels = -(-nc // nr)
            for pc in range(0, k, kc_max):                               # G2
                kc = min(kc_max, k - pc)
                beta_blk = beta if pc == 0 else 1.0
                b_src = b[pc:pc + kc, jc:jc + nc]
                if pool is None:
                    pack_b(b_src, nr, b_buf)
                else:
                    _run_all(pool, lambda w, lo, hi: pack_b(b_src, nr, b_buf, lo, hi),
                             _split(npanels, T))

                if loop == "g3":
                    blocks = range(0, m, mc_max)

                    def g3_worker(w, lo, hi):
                        for ic in blocks[lo:hi]:
                            mc = min(mc_max, m - ic)
                            pack_a(a[ic:ic + mc, pc:pc + kc], mr, a_bufs[w])
                            macro(mr, nr, kc, alpha, a_bufs[w], b_buf, beta_blk,
                                  c[ic:ic + mc, jc:jc + nc], mc, nc, 0, npanels)

                    _run_all(pool, g3_worker, _split(len(blocks), T))
                    continue

                a_buf = a_bufs[0]
                for ic in range(0, m, mc_max):                           # G3
                    mc = min(mc_max, m - ic)
                    a_src = a[ic:ic + mc, pc:pc + kc]
                    c_blk = c[ic:ic + mc, jc:jc + nc]
                    if pool is None:
                        pack_a(a_src, mr, a_buf)
                        macro(mr, nr, kc, alpha, a_buf, b_buf, beta_blk, c_blk, mc, nc, 0, npanels)
                        continue
                    _run_all(pool, lambda w, lo, hi: pack_a(a_src, mr, a_buf, lo, hi),
                             _split(-(-mc // mr), T))
                    _run_all(pool,                                       # G4
                             lambda w, lo, hi: macro(mr, nr, kc, alpha, a_buf, b_buf,
                                                     beta_blk, c_blk, mc, nc, lo, hi),
                             _split(npanels, T))
    finally:
        if pool is not None:
            pool.shutdown(wait=True)


def make_context(hier: CacheHierarchy, entry: MicroKernelEntry, m: int, n: int, k: int,
                 policy: str = "refined", threads: int = 1,
                 parallel_loop: str = "none") -> GemmContext:
    ccps = _ccp.ccps_for(policy, hier, entry.shape, max(m, 1), max(n, 1), max(k, 1))
    return GemmContext(entry, ccps, threads, parallel_loop, hier)
