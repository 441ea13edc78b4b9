"""Self-contained verification suites behind ``gemmlab verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from gemmlab import ccp, tables
from gemmlab.factor import lu_blocked, lu_residual
from gemmlab.gemm import GemmContext, gemm
from gemmlab.hwdesc import load_machine
from gemmlab.microkernel import MicroKernelShape, register_machine
from gemmlab.pack import pack_a, pack_b, padding_of, unpack_a, unpack_b
from gemmlab.reference import TestMatrixSpec, gemm_error_bound, gen_matrix, oracle_gemm

LU_RESIDUAL_MAX = 50.0


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def lines(self) -> List[str]:
        out = [f"{self.suite}: {'PASS' if self.ok else 'FAIL'} ({self.checks} checks, "
               f"{len(self.failures)} failures)"]
        out += [f"  note: {n}" for n in self.notes]
        out += [f"  fail: {f}" for f in self.failures[:20]]
        return out


def verify_ccp(seed: int = 0) -> SuiteResult:
    res = SuiteResult("ccp")
    carmel = load_machine("carmel")
    for tid in tables.TABLE_IDS:
        mismatches, errata = tables.compare_table(carmel, tid)
        res.checks += len(tables.golden_rows(tid))
        for mm in mismatches:
            res.fail(f"{tid} row {mm.row} {mm.column}: golden {mm.golden}, model {mm.actual}")
        for mm in errata:
            res.notes.append(f"{tid} row {mm.row} {mm.column}: golden {mm.golden}, "
                             f"model {mm.actual} (known erratum)")
    epyc = load_machine("epyc7282")
    for k, want in ((64, (768, 2000, 64)), (256, (192, 2000, 256))):
        got = ccp.refined_ccps(epyc, MicroKernelShape(8, 6), 2000, 2000, k).as_tuple()
        res.checks += 1
        if got != want:
            res.fail(f"epyc7282 8x6 k={k}: expected {want}, got {got}")
    return res


def verify_pack(seed: int = 0, cases: int = 200) -> SuiteResult:
    res = SuiteResult("pack")
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        rows, cols = (int(x) for x in rng.integers(1, 40, size=2))
        r = int(rng.integers(1, 13))
        x = np.asfortranarray(rng.uniform(-1, 1, (rows, cols)))
        for form, pack, unpack in (("A", pack_a, unpack_a), ("B", pack_b, unpack_b)):
            buf = pack(x, r)
            res.checks += 1
            if not np.array_equal(unpack(buf), x):
                res.fail(f"{form} round trip {rows}x{cols} r={r}")
            pad = padding_of(buf)
            if pad.size and not (np.all(pad == 0.0) and not np.any(np.signbit(pad))):
                res.fail(f"{form} padding not +0.0 for {rows}x{cols} r={r}")
    return res


def verify_gemm(seed: int = 0, cases: int = 40, max_dim: int = 129) -> SuiteResult:
    res = SuiteResult("gemm")
    rng = np.random.default_rng(seed)
    entries = []
    for name in ("carmel", "epyc7282"):
        entries += register_machine(load_machine(name))
    for case in range(cases):
        m, n, k = (int(x) for x in rng.integers(1, max_dim + 1, size=3))
        entry = entries[case % len(entries)]
        ccps = ccp.CcpTriple(*(int(x) for x in rng.integers(1, 160, size=3)))
        alpha, beta = float(rng.uniform(-2, 2)), float(rng.choice([0.0, 1.0, rng.uniform(-2, 2)]))
        a = gen_matrix(TestMatrixSpec("uniform", seed + 3 * case, m, k))
        b = gen_matrix(TestMatrixSpec("uniform", seed + 3 * case + 1, k, n))
        c0 = gen_matrix(TestMatrixSpec("uniform", seed + 3 * case + 2, m, n))
        c, ref = c0.copy(order="F"), c0.copy(order="F")
        gemm(alpha, a, b, beta, c, GemmContext(entry, ccps))
        oracle_gemm(alpha, a, b, beta, ref)
        res.checks += 1
        if not np.all(np.abs(c - ref) <= gemm_error_bound(alpha, a, b, beta, c0)):
            res.fail(f"case {case}: {m}x{n}x{k} {entry} ccps={ccps.as_tuple()}")
    return res


def verify_lu(seed: int = 0) -> SuiteResult:
    res = SuiteResult("lu")
    carmel = load_machine("carmel")
    entry = register_machine(carmel)[0]
    for i, (s, b) in enumerate(((8, 1), (64, 8), (128, 32), (200, 64))):
        a0 = gen_matrix(TestMatrixSpec("uniform", seed + i, s, s))
        a = a0.copy(order="F")
        t = max(s - b, 1)
        ctx = GemmContext(entry, ccp.refined_ccps(carmel, entry.shape, t, t, b), hier=carmel)
        out = lu_blocked(a, b, ctx)
        r = lu_residual(a0, a, out.pivots)
        res.checks += 1
        if not r <= LU_RESIDUAL_MAX:
            res.fail(f"s={s} b={b}: scaled residual {r:.3g} > {LU_RESIDUAL_MAX}")
        if np.any(np.abs(np.tril(a, -1)) > 1.0):
            res.fail(f"s={s} b={b}: |L| entry above 1")
    return res


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "ccp": verify_ccp,
    "pack": verify_pack,
    "gemm": verify_gemm,
    "lu": verify_lu,
}
