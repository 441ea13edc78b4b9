"""Exit criteria. Each test prints one PASS/FAIL line and feeds the summary in conftest."""

import math
import time

import numpy as np
import pytest

from gemmlab import bench, ccp, tables
from gemmlab.ccp import CcpTriple, flops_per_memop, refined_ccps
from gemmlab.factor import lu_blocked, lu_residual
from gemmlab.gemm import GemmContext, gemm, make_context
from gemmlab.hwdesc import RegisterFile
from gemmlab.microkernel import MicroKernelShape as S
from gemmlab.microkernel import KernelRegistry, RegistryError, register_budget
from gemmlab.microkernel import generic_kernel_for, register_machine, specialized_kernel_for
from gemmlab.pack import pack_a, pack_b, padding_of, unpack_a, unpack_b
from gemmlab.reference import TestMatrixSpec, gemm_error_bound, gen_matrix, oracle_gemm

pytestmark = pytest.mark.acceptance


@pytest.fixture
def criterion(request):
    def tag(name, detail=""):
        request.node.user_properties.append(("criterion", name))
        if detail:
            request.node.user_properties.append(("detail", detail))

    return tag


def _report(criterion, name, ok, detail):
    criterion(name, detail)
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


def _warm_up(entries):
    """Trigger JIT compilation (cached on disk after the first run) outside timed regions."""
    a = np.ones((3, 2), order="F")
    b = np.ones((2, 3), order="F")
    for e in entries:
        gemm(1.0, a, b, 0.0, np.zeros((3, 3), order="F"), GemmContext(e, CcpTriple(2, 2, 1)))
    oracle_gemm(1.0, a, b, 0.0, np.zeros((3, 3), order="F"))



# 1. Tables 2 and 3

def test_golden_tables_2_and_3(carmel, criterion):
    t0 = time.perf_counter()
    bad = []
    cells = 0
    for tid in ("t2", "t3"):
        mismatches, errata = tables.compare_table(carmel, tid)
        bad += mismatches + errata
        cells += len(tables.golden_rows(tid)) * (len(tables.HEADER) - len(tables.EXCLUDED))
    row = tables.model_row(carmel, S(6, 8), 2000, 2000, 160, "refined")
    spot = (row["mc"], row["ac_kib"], row["ac_pct"], row["ac_max_pct"]) == ("1424", "1780.0", "86.9", "87.5")
    row = tables.model_row(carmel, S(4, 10), 2000, 2000, 128, "refined")
    spot &= (row["mc"], row["ac_pct"], row["ac_max_pct"]) == ("1664", "81.2", "81.2")
    elapsed = time.perf_counter() - t0
    ok = not bad and spot and elapsed < 1.0
    _report(criterion, "golden tables 2 and 3 reproduced exactly", ok,
            f"{cells} cells, {len(bad)} differ, {elapsed:.3f}s")


# 2. fig4 static-profile table

def test_static_profile_table(carmel, criterion):
    t0 = time.perf_counter()
    mismatches, errata = tables.compare_table(carmel, "fig4")
    row = tables.model_row(carmel, S(6, 8), 2000, 2000, 224, "static")
    spot = (row["br_kib"], row["br_pct"], row["ac_kib"], row["ac_pct"]) == ("14.0", "21.9", "210.0", "10.3")
    elapsed = time.perf_counter() - t0
    ok = not mismatches and spot and elapsed < 1.0
    _report(criterion, "fig4 static profile reproduced", ok,
            f"all cells but {len(errata)} known erratum match, {elapsed:.3f}s")


@pytest.mark.xfail(strict=True, reason="golden value 18.7 for 12 KiB / 64 KiB = 18.75 %; "
                                       "the same configuration is printed as 18.8 elsewhere")
def test_static_profile_erratum_cell(carmel, criterion):
    criterion("fig4 static profile reproduced", "k=192 B_r % cell: golden 18.7, computed 18.8")
    golden = tables.golden_rows("fig4")[4]
    row = tables.model_row(carmel, S(6, 8), 2000, 2000, 192, "static")
    assert golden["k"] == "192"
    assert row["br_pct"] == golden["br_pct"]


# 3. AMD anchors

def test_amd_model_anchors(epyc, criterion):
    t0 = time.perf_counter()
    got = [refined_ccps(epyc, S(8, 6), 2000, 2000, k).as_tuple() for k in (64, 256)]
    elapsed = time.perf_counter() - t0
    ok = got == [(768, 2000, 64), (192, 2000, 256)] and elapsed < 1.0
    _report(criterion, "EPYC refined CCP anchors", ok, f"k=64 -> {got[0]}, k=256 -> {got[1]}")


# 4. flops per memop

def test_flops_per_memop(criterion):
    cases = [((6, 8), 6.51, 0.01), ((4, 10), 5.47, 0.03), ((4, 12), 5.73, 0.03)]
    vals = [flops_per_memop(S(*shape), 128) for shape, _, _ in cases]
    ok = all(abs(v - want) <= tol for v, (_, want, tol) in zip(vals, cases))
    _report(criterion, "flops/memop at k_c=128", ok, ", ".join(f"{v:.4f}" for v in vals))


# 5. register budget

def test_register_budget(carmel, criterion):
    regs = carmel.registers
    assert regs == RegisterFile(128, 32, 64)
    b68 = register_budget((6, 8), regs, "n")
    b124 = register_budget((12, 4), regs, "m")
    b88 = register_budget((8, 8), regs, "n")
    reg = KernelRegistry()
    bad = specialized_kernel_for((6, 8))
    bad = type(bad)(S(8, 8), bad.kind, bad.kernel, bad.macro)
    try:
        reg.register(bad, "carmel", regs)
        rejected = False
    except RegistryError:
        rejected = True
    ok = b68 == (True, 31) and b124 == (True, 32) and not b88[0] and rejected
    _report(criterion, "register budget", ok,
            f"6x8 -> {b68[1]}, 12x4 -> {b124[1]}, 8x8 -> {b88[1]} (rejected: {rejected})")


# 6. GEMM oracle equivalence

def _random_ccps(rng, m, n, k, budget=512):
    """Random CCPs, redrawn while the number of (G1, G2, G3) blocks exceeds ``budget``."""
    while True:
        mc, nc, kc = (int(x) for x in rng.integers(1, 300, size=3))
        if math.ceil(m / mc) * math.ceil(n / nc) * math.ceil(k / kc) <= budget:
            return CcpTriple(mc, nc, kc)


def test_gemm_oracle_equivalence(all_kernels, criterion):
    _warm_up(all_kernels)
    rng = np.random.default_rng(20240501)
    t0 = time.perf_counter()
    failures = []
    for case in range(500):
        m, n, k = (int(x) for x in rng.integers(1, 258, size=3))
        entry = all_kernels[case % len(all_kernels)]
        ccps = _random_ccps(rng, m, n, k)
        alpha = float(rng.uniform(-2, 2))
        beta = float(rng.choice([0.0, 1.0, float(rng.uniform(-2, 2))]))
        a = gen_matrix(TestMatrixSpec("uniform", 3 * case, m, k))
        b = gen_matrix(TestMatrixSpec("uniform", 3 * case + 1, k, n))
        c0 = gen_matrix(TestMatrixSpec("uniform", 3 * case + 2, m, n))
        c, ref = c0.copy(order="F"), c0.copy(order="F")
        gemm(alpha, a, b, beta, c, GemmContext(entry, ccps))
        oracle_gemm(alpha, a, b, beta, ref)
        if not np.all(np.abs(c - ref) <= gemm_error_bound(alpha, a, b, beta, c0)):
            failures.append((case, m, n, k, str(entry), ccps.as_tuple()))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    _report(criterion, "GEMM oracle equivalence (500 cases)", ok,
            f"{len(all_kernels)} kernels, {len(failures)} failures, {elapsed:.1f}s")


# 7. threaded determinism

def test_threaded_determinism(all_kernels, criterion):
    _warm_up(all_kernels)
    rng = np.random.default_rng(7)
    t0 = time.perf_counter()
    differing = []
    for case in range(20):
        m, n, k = (int(x) for x in rng.integers(1, 400, size=3))
        ccps = CcpTriple(*(int(x) for x in rng.integers(8, 160, size=3)))
        entry = all_kernels[case % len(all_kernels)]
        a = gen_matrix(TestMatrixSpec("uniform", case, m, k))
        b = gen_matrix(TestMatrixSpec("uniform", case + 100, k, n))
        c0 = gen_matrix(TestMatrixSpec("uniform", case + 200, m, n))
        base = c0.copy(order="F")
        gemm(1.1, a, b, 0.3, base, GemmContext(entry, ccps))
        for threads in (2, 4, 8):
            for loop in ("g3", "g4"):
                c = c0.copy(order="F")
                gemm(1.1, a, b, 0.3, c, GemmContext(entry, ccps, threads, loop))
                if not np.array_equal(c, base):
                    differing.append((case, threads, loop))
    elapsed = time.perf_counter() - t0
    ok = not differing and elapsed < 60
    _report(criterion, "threaded determinism (T in 1,2,4,8 x G3,G4)", ok,
            f"20 cases, {len(differing)} differ from T=1, {elapsed:.1f}s")


# 8. LU correctness

def test_lu_correctness(carmel, criterion):
    kernels = register_machine(carmel) + [generic_kernel_for((4, 10))]
    _warm_up(kernels)
    t0 = time.perf_counter()
    worst, bad_l, runs, problems = 0.0, 0, 0, []
    for s in (8, 64, 256, 512):
        a0 = gen_matrix(TestMatrixSpec("uniform", s, s, s))
        for b in (1, 4, 8, 32, 64):
            if b > s:
                continue  # block size precondition 1 <= b <= s
            for threads in (1, 4):
                entry = kernels[runs % len(kernels)]
                loop = "none" if threads == 1 else ("g4" if runs % 2 else "g3")
                t = max(s - b, 1)
                ctx = make_context(carmel, entry, t, t, b, "refined", threads, loop)
                a = a0.copy(order="F")
                res = lu_blocked(a, b, ctx)
                r = lu_residual(a0, a, res.pivots)
                worst = max(worst, r)
                if not r <= 50:
                    problems.append(f"s={s} b={b} T={threads} residual {r:.3g}")
                if np.any(np.abs(np.tril(a, -1)) > 1.0):
                    bad_l += 1
                    problems.append(f"s={s} b={b} T={threads} |L|>1")
                runs += 1
    pivot_mismatch = []
    for s in (8, 64, 256, 512):
        a0 = gen_matrix(TestMatrixSpec("integer", 1000 + s, s, s))
        piv = {}
        for b in (1, min(64, s)):
            t = max(s - b, 1)
            a = a0.copy(order="F")
            piv[b] = lu_blocked(a, b, make_context(carmel, kernels[0], t, t, b)).pivots
        if not np.array_equal(piv[1], piv[min(64, s)]):
            pivot_mismatch.append(s)
    elapsed = time.perf_counter() - t0
    ok = not problems and not pivot_mismatch and elapsed < 120
    _report(criterion, "LU correctness", ok,
            f"{runs} runs, worst residual {worst:.3g}, |L|>1 in {bad_l}, "
            f"pivot mismatches {pivot_mismatch}, {elapsed:.1f}s")


# 9. packing round trip

def test_packing_round_trip(criterion):
    pack_a(np.ones((2, 2), order="F"), 2)
    pack_b(np.ones((2, 2), order="F"), 2)
    rng = np.random.default_rng(99)
    t0 = time.perf_counter()
    failures, non_multiples = 0, 0
    for case in range(200):
        rows, cols = (int(x) for x in rng.integers(1, 200, size=2))
        r = int(rng.integers(1, 17))
        x = np.asfortranarray(rng.uniform(-1, 1, (rows, cols)))
        non_multiples += rows % r != 0 or cols % r != 0
        for pack, unpack in ((pack_a, unpack_a), (pack_b, unpack_b)):
            buf = pack(x, r)
            pad = padding_of(buf)
            if not np.array_equal(unpack(buf), x) or np.any(pad != 0.0) or np.any(np.signbit(pad)):
                failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and non_multiples > 0 and elapsed < 5
    _report(criterion, "packing round trip (200 shapes)", ok,
            f"{non_multiples} non-multiple shapes, {failures} failures, {elapsed:.2f}s")


# 10. performance sanity, informational only

def test_performance_sanity(carmel, criterion, request):
    wins = []
    for run in range(3):
        refined = bench.bench_gemm(carmel, 2000, 2000, [96], policy="refined", seed=run)[0]
        ctx_static = make_context(carmel, bench.resolve_kernel(carmel, "auto", 2000, 2000, 96),
                                  2000, 2000, 96, "static")
        a = gen_matrix(TestMatrixSpec("uniform", run, 2000, 96))
        b = gen_matrix(TestMatrixSpec("uniform", run + 1, 96, 2000))
        c = np.zeros((2000, 2000), order="F")
        gemm(1.0, a, b, 0.0, c, ctx_static)
        times = []
        for _ in range(bench.MIN_REPS):
            t0 = time.perf_counter()
            gemm(1.0, a, b, 0.0, c, ctx_static)
            times.append(time.perf_counter() - t0)
        static_gflops = bench.gemm_flops(2000, 2000, 96) / sorted(times)[1] / 1e9
        wins.append((refined.gflops, static_gflops))
    met = sum(r >= s for r, s in wins) >= 2
    detail = ("non-gating; " + ("directional check met" if met else "directional check NOT met")
              + "; refined vs static GFLOPS: "
              + ", ".join(f"{r:.2f}/{s:.2f}" for r, s in wins))
    criterion("performance sanity (informational)", detail)
    request.node.user_properties.append(("label", "INFO"))
    print(f"INFO performance sanity: {detail}")
