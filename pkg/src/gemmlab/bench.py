"""Benchmark sweeps for GEMM and blocked LU, reported as CSV records."""

from __future__ import annotations

import csv
import io
import os
import statistics
import time
from dataclasses import asdict, dataclass, fields
from typing import Iterable, List, Optional, Sequence

import numpy as np

from gemmlab import __version__
from gemmlab.ccp import select_kernel
from gemmlab.factor import lu_blocked, lu_residual
from gemmlab.gemm import gemm, make_context
from gemmlab.hwdesc import CacheHierarchy
from gemmlab.microkernel import MicroKernelEntry, register_machine, specialized_kernel_for
from gemmlab.microkernel import MicroKernelShape, generic_kernel_for
from gemmlab.reference import TestMatrixSpec, gemm_error_bound, gen_matrix, oracle_gemm

MIN_REPS = 3
VERIFY_DIM = 257


@dataclass
class BenchRecord:
    operation: str
    m: int
    n: int
    k: int
    s: Optional[int]
    b: Optional[int]
    policy: str
    kernel: str
    threads: int
    parallel_loop: str
    mc: int
    nc: int
    kc: int
    repetitions: int
    median_seconds: float
    flop_count: float
    gflops: float
    check: str = ""


def gemm_flops(m, n, k) -> float:
    return 2.0 * m * n * k


def lu_flops(s) -> float:
    return 2.0 / 3.0 * s ** 3


def resolve_kernel(hier: CacheHierarchy, mk: str, m: int, n: int, k: int) -> MicroKernelEntry:
    """``auto`` picks from the machine's ranked list; ``6x8`` names a shape."""
    candidates = register_machine(hier)
    if mk == "auto":
        entry, _ = select_kernel(candidates, hier, "profile", max(m, 1), max(n, 1), max(k, 1))
        return entry
    shape = MicroKernelShape.parse(mk)
    for entry in candidates:
        if entry.shape == shape:
            return entry
    try:
        return specialized_kernel_for(shape)
    except KeyError:
        return generic_kernel_for(shape)


def _median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def _gemm_check(ctx, m, n, k, seed) -> str:
    m, n, k = min(m, VERIFY_DIM), min(n, VERIFY_DIM), min(k, VERIFY_DIM)
    a = gen_matrix(TestMatrixSpec("uniform", seed, m, k))
    b = gen_matrix(TestMatrixSpec("uniform", seed + 1, k, n))
    c = gen_matrix(TestMatrixSpec("uniform", seed + 2, m, n))
    c0 = c.copy(order="F")
    ref = c.copy(order="F")
    gemm(1.0, a, b, 1.0, c, ctx.retarget(m, n, k))
    oracle_gemm(1.0, a, b, 1.0, ref)
    bound = gemm_error_bound(1.0, a, b, 1.0, c0)
    return "pass" if np.all(np.abs(c - ref) <= bound) else "fail"


def bench_gemm(hier: CacheHierarchy, m: int, n: int, ks: Iterable[int], mk: str = "auto",
               policy: str = "refined", threads: int = 1, parallel_loop: str = "none",
               reps: int = MIN_REPS, verify: bool = False, seed: int = 0) -> List[BenchRecord]:
    if reps < MIN_REPS:
        raise ValueError(f"at least {MIN_REPS} repetitions are required, got {reps}")
    records = []
    for k in ks:
        entry = resolve_kernel(hier, mk, m, n, k)
        ctx = make_context(hier, entry, m, n, k, policy, threads, parallel_loop)
        a = gen_matrix(TestMatrixSpec("uniform", seed, m, k))
        b = gen_matrix(TestMatrixSpec("uniform", seed + 1, k, n))
        c = np.zeros((m, n), order="F")
        gemm(1.0, a, b, 0.0, c, ctx)  # warm-up (JIT specialisation, page faults)
        t = _median_time(lambda: gemm(1.0, a, b, 0.0, c, ctx), reps)
        flops = gemm_flops(m, n, k)
        records.append(BenchRecord(
            "gemm", m, n, k, None, None, policy, str(entry), threads, ctx.parallel_loop,
            *ctx.ccps.as_tuple(), reps, t, flops, flops / t / 1e9,
            _gemm_check(ctx, m, n, k, seed) if verify else "",
        ))
    return records


def bench_lu(hier: CacheHierarchy, s: int, bs: Iterable[int], mk: str = "auto",
             policy: str = "refined", threads: int = 1, parallel_loop: str = "none",
             reps: int = MIN_REPS, verify: bool = False, seed: int = 0) -> List[BenchRecord]:
    if reps < MIN_REPS:
        raise ValueError(f"at least {MIN_REPS} repetitions are required, got {reps}")
    bs = list(bs)
    for b in bs:
        if not 1 <= b <= s:
            raise ValueError(f"block size b={b} must satisfy 1 <= b <= s={s}")
    a0 = gen_matrix(TestMatrixSpec("uniform", seed, s, s))
    records = []
    for b in bs:
        t_dim = max(s - b, 1)
        entry = resolve_kernel(hier, mk, t_dim, t_dim, b)
        ctx = make_context(hier, entry, t_dim, t_dim, b, policy, threads, parallel_loop)
        work = a0.copy(order="F")
        lu_blocked(work, b, ctx)  # warm-up
        times, result = [], None
        for _ in range(reps):
            work = a0.copy(order="F")
            t0 = time.perf_counter()
            result = lu_blocked(work, b, ctx)
            times.append(time.perf_counter() - t0)
        t = statistics.median(times)
        check = f"{lu_residual(a0, work, result.pivots):.3g}" if verify else ""
        flops = lu_flops(s)
        records.append(BenchRecord(
            "lu", t_dim, t_dim, b, s, b, policy, str(entry), threads, ctx.parallel_loop,
            *ctx.ccps.as_tuple(), reps, t, flops, flops / t / 1e9, check,
        ))
    return records


def metadata(hier: CacheHierarchy, policy: str, reps: Optional[int] = None) -> List[str]:
    pin = os.environ.get("OMP_PROC_BIND", "unset")
    line = f"gemmlab {__version__} machine={hier.name} policy={policy}"
    if reps is not None:
        line += f" statistic=median-of-{reps}"
    return [line, f"thread pinning: OMP_PROC_BIND={pin} (recorded, not enforced)"]


def records_csv(records: Sequence[BenchRecord], comments: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    names = [f.name for f in fields(BenchRecord)]
    w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    w.writeheader()
    for r in records:
        row = asdict(r)
        row = {key: ("" if v is None else v) for key, v in row.items()}
        row["median_seconds"] = f"{r.median_seconds:.6g}"
        row["gflops"] = f"{r.gflops:.6g}"
        row["flop_count"] = f"{r.flop_count:.17g}"
        w.writerow(row)
    return buf.getvalue()
