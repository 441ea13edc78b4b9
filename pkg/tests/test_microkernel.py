import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gemmlab.hwdesc import RegisterFile
from gemmlab.microkernel import (
    FALLBACK_SHAPES,
    GENERIC,
    SIMD,
    KernelRegistry,
    MicroKernelShape,
    RegistryError,
    generic_kernel_for,
    register_budget,
    register_machine,
    run_microkernel,
    specialized_kernel_for,
)

ARM = RegisterFile(128, 32, 64)
ULP = np.finfo(np.float64).eps


def _panels(rng, mr, nr, kc):
    a = rng.uniform(-1, 1, (kc, mr))  # row p holds column p of A_r
    b = rng.uniform(-1, 1, (kc, nr))  # row p holds row p of B_r
    return a, b


def _reference(a, b, c0, alpha, beta_first):
    """Plain Python loops over the unpacked panels."""
    kc, mr = a.shape
    nr = b.shape[1]
    out = np.zeros((mr, nr)) if beta_first else c0.copy()
    for i in range(mr):
        for j in range(nr):
            s = 0.0
            for p in range(kc):
                s += a[p, i] * b[p, j]
            out[i, j] = (0.0 if beta_first else out[i, j]) + alpha * s
    return out


def test_single_rank_one_update():
    c = np.zeros((2, 2), order="F")
    run_microkernel(generic_kernel_for((2, 2)), np.array([1.0, 2.0]), np.array([3.0, 4.0]), c, 1)
    assert np.array_equal(c, [[3, 4], [6, 8]])


@pytest.mark.parametrize("kind", [GENERIC, SIMD])
def test_6x8_matches_brute_force(kind, rng):
    entry = generic_kernel_for((6, 8)) if kind == GENERIC else specialized_kernel_for((6, 8))
    a, b = _panels(rng, 6, 8, 17)
    c0 = np.asfortranarray(rng.uniform(-1, 1, (6, 8)))
    c = c0.copy(order="F")
    run_microkernel(entry, a, b, c, 17, alpha=0.75)
    want = _reference(a, b, c0, 0.75, False)
    scale = np.abs(a).T @ np.abs(b) * 0.75 + np.abs(c0)
    assert np.all(np.abs(c - want) <= 4 * 17 * ULP * scale)


def test_negative_alpha_cancels_preseeded_product(rng):
    a, b = _panels(rng, 6, 8, 33)
    c = np.asfortranarray(_reference(a, b, None, 1.0, True))
    run_microkernel(specialized_kernel_for((6, 8)), a, b, c, 33, alpha=-1.0)
    scale = np.abs(a).T @ np.abs(b)
    assert np.all(np.abs(c) <= 4 * 33 * ULP * scale)


def test_transposed_shapes_agree(rng):
    a, b = _panels(rng, 12, 4, 50)
    c12 = np.zeros((12, 4), order="F")
    c4 = np.zeros((4, 12), order="F")
    run_microkernel(generic_kernel_for((12, 4)), a, b, c12, 50, beta_first=True)
    # swapping the operands computes the transposed product
    run_microkernel(generic_kernel_for((4, 12)), b, a, c4, 50, beta_first=True)
    assert np.array_equal(c12, c4.T)


def test_one_by_one_is_a_dot_product(rng):
    a, b = rng.uniform(-1, 1, 40), rng.uniform(-1, 1, 40)
    c = np.zeros((1, 1), order="F")
    run_microkernel(generic_kernel_for((1, 1)), a, b, c, 40, beta_first=True)
    want = 0.0
    for x, y in zip(a, b):
        want += x * y
    assert c[0, 0] == want


def test_beta_first_ignores_nan_in_c(rng):
    a, b = _panels(rng, 4, 4, 3)
    c = np.full((4, 4), np.nan, order="F")
    run_microkernel(generic_kernel_for((4, 4)), a, b, c, 3, beta_first=True)
    assert np.all(np.isfinite(c))


def test_wrong_tile_shape_rejected():
    with pytest.raises(ValueError):
        run_microkernel(generic_kernel_for((6, 8)), np.zeros(6), np.zeros(8), np.zeros((8, 6)), 1)
    with pytest.raises(ValueError):
        run_microkernel(generic_kernel_for((6, 8)), np.zeros(6), np.zeros(8), np.zeros((6, 8)), 2)


@given(st.sampled_from(FALLBACK_SHAPES), st.integers(1, 512), st.integers(0, 2**32 - 1),
       st.booleans())
def test_oracle_equivalence_and_generic_simd_agreement(shape, kc, seed, beta_first):
    rng = np.random.default_rng(seed)
    mr, nr = shape
    a, b = _panels(rng, mr, nr, kc)
    c0 = np.asfortranarray(rng.uniform(-1, 1, (mr, nr)))
    outs = []
    for entry in (generic_kernel_for(shape), specialized_kernel_for(shape)):
        c = c0.copy(order="F")
        run_microkernel(entry, a, b, c, kc, alpha=1.5, beta_first=beta_first)
        outs.append(c)
    assert np.array_equal(outs[0], outs[1])
    ref = np.zeros((mr, nr)) if beta_first else c0
    want = ref + 1.5 * (a.T @ b)
    scale = 1.5 * (np.abs(a).T @ np.abs(b)) + (0 if beta_first else np.abs(c0))
    assert np.all(np.abs(outs[0] - want) <= 4 * kc * ULP * scale)


@given(st.sampled_from(FALLBACK_SHAPES), st.integers(1, 64), st.integers(0, 2**32 - 1))
def test_alpha_linearity(shape, kc, seed):
    rng = np.random.default_rng(seed)
    a, b = _panels(rng, *shape, kc)
    one, two = np.zeros(shape, order="F"), np.zeros(shape, order="F")
    entry = specialized_kernel_for(shape)
    run_microkernel(entry, a, b, one, kc, alpha=1.0, beta_first=True)
    run_microkernel(entry, a, b, two, kc, alpha=2.0, beta_first=True)
    assert np.array_equal(two, 2 * one)


# register budget

def test_budget_examples():
    assert register_budget((6, 8), ARM) == (True, 31)
    assert register_budget((12, 4), ARM, "m") == (True, 32)
    assert register_budget((8, 8), ARM) == (False, 40)


@given(st.integers(1, 24), st.integers(1, 24), st.integers(0, 4), st.integers(0, 4),
       st.sampled_from([64, 128, 256, 512]), st.integers(1, 64), st.sampled_from("mn"))
def test_budget_monotone(mr, nr, dm, dn, bits, count, vdim):
    regs = RegisterFile(bits, count, 64)
    small_fits, small_need = register_budget((mr, nr), regs, vdim)
    big_fits, big_need = register_budget((mr + dm, nr + dn), regs, vdim)
    assert big_need >= small_need
    assert not (big_fits and not small_fits)


# registry

def test_registry_order_and_fallbacks():
    reg = KernelRegistry()
    reg.register(specialized_kernel_for((12, 4), "m"), "carmel", ARM)
    reg.register(specialized_kernel_for((6, 8)), "carmel", ARM)
    got = reg.lookup("carmel")
    assert [str(e.shape) for e in got[:2]] == ["12x4", "6x8"]
    assert all(e.kind == GENERIC for e in got[2:])
    assert [(e.m_r, e.n_r) for e in got[2:]] == list(FALLBACK_SHAPES)


def test_registry_unknown_machine_gets_generics():
    got = KernelRegistry().lookup("nowhere")
    assert got and all(e.kind == GENERIC for e in got)


def test_registry_rejects_duplicates_and_overbudget():
    reg = KernelRegistry()
    reg.register(specialized_kernel_for((6, 8)), "carmel", ARM)
    with pytest.raises(RegistryError):
        reg.register(specialized_kernel_for((6, 8)), "carmel", ARM)
    over = specialized_kernel_for((6, 8))
    over = type(over)(MicroKernelShape(8, 8), SIMD, over.kernel, over.macro)
    with pytest.raises(RegistryError, match="40"):
        reg.register(over, "carmel", ARM)
    # a generic entry of the same shape is a different (shape, kind) pair
    reg.register(generic_kernel_for((6, 8)), "carmel")


def test_register_machine_uses_profile_order(carmel, epyc):
    reg = KernelRegistry()
    got = register_machine(carmel, reg)
    assert [str(e) for e in got[:2]] == ["12x4/simd", "6x8/simd"]
    assert got[0].vector_dim == "m"
    assert register_machine(carmel, reg) == got  # idempotent
    assert [str(e) for e in register_machine(epyc, reg)[:2]] == ["8x6/simd", "6x8/simd"]


def test_specialized_requires_generated_shape():
    with pytest.raises(KeyError):
        specialized_kernel_for((7, 7))


def test_shape_parse():
    assert MicroKernelShape.parse("12X4") == MicroKernelShape(12, 4)
    with pytest.raises(ValueError):
        MicroKernelShape.parse("12")
    with pytest.raises(ValueError):
        MicroKernelShape(0, 4)


def test_generated_module_is_current():
    out = subprocess.run([sys.executable, "-m", "gemmlab.microkernel.codegen"],
                         capture_output=True, text=True, check=True).stdout
    shipped = Path(__file__).parents[1] / "src/gemmlab/microkernel/_unrolled.py"
    assert out == shipped.read_text()
