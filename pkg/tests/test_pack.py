import numpy as np
import pytest
from hypothesis import given, strategies as st

from gemmlab import ccp
from gemmlab.microkernel import MicroKernelShape
from gemmlab.pack import (
    FAULT_ENV,
    a_capacity,
    aligned_empty,
    b_capacity,
    check_view,
    leading_dimension,
    pack_a,
    pack_b,
    padding_of,
    unpack_a,
    unpack_b,
)


def _block(rows, cols, seed=0):
    return np.asfortranarray(np.random.default_rng(seed).uniform(-1, 1, (rows, cols)))


def _a_storage_oracle(x, mr):
    """Element-by-element layout: panels of k columns, each m_r contiguous rows."""
    m, k = x.shape
    panels = -(-m // mr)
    out = []
    for ip in range(panels):
        for p in range(k):
            for r in range(mr):
                i = ip * mr + r
                out.append(x[i, p] if i < m else 0.0)
    return np.array(out)


def _b_storage_oracle(x, nr):
    k, n = x.shape
    panels = -(-n // nr)
    out = []
    for jp in range(panels):
        for p in range(k):
            for c in range(nr):
                j = jp * nr + c
                out.append(x[p, j] if j < n else 0.0)
    return np.array(out)


def test_single_exact_a_panel():
    x = _block(4, 3)
    buf = pack_a(x, 4)
    assert buf.panels == 1
    assert np.array_equal(buf.storage[:12], x.ravel(order="F"))
    assert np.array_equal(unpack_a(buf), x)


def test_a_edge_panel_layout():
    x = _block(5, 3)
    buf = pack_a(x, 4)
    assert buf.panels == 2 and buf.padded_rows == 8
    second = buf.storage[12:24].reshape(3, 4)
    for p in range(3):
        assert np.array_equal(second[p], [x[4, p], 0, 0, 0])
    assert np.array_equal(buf.storage[:24], _a_storage_oracle(x, 4))


def test_identity_extended_round_trip():
    x = np.asfortranarray(np.eye(6, 2))
    assert np.array_equal(unpack_a(pack_a(x, 4)), x)


def test_single_exact_b_panel():
    x = _block(3, 8)
    buf = pack_b(x, 8)
    assert buf.panels == 1
    assert np.array_equal(buf.storage[:24], x.ravel(order="C"))


def test_b_edge_panel_layout():
    x = _block(3, 10)
    buf = pack_b(x, 8)
    assert buf.panels == 2 and buf.padded_cols == 16
    second = buf.storage[24:48].reshape(3, 8)
    assert np.array_equal(second[:, :2], x[:, 8:])
    assert np.all(second[:, 2:] == 0)
    assert np.array_equal(buf.storage[:48], _b_storage_oracle(x, 8))


def test_b_single_row_panels():
    x = _block(1, 11)
    buf = pack_b(x, 4)
    assert np.array_equal(unpack_b(buf), x)
    assert np.array_equal(buf.storage[:12], _b_storage_oracle(x, 4))


def test_zero_and_exact_multiple_round_trip():
    z = np.zeros((8, 6), order="F")
    assert np.array_equal(unpack_a(pack_a(z, 4)), z)
    assert np.array_equal(unpack_b(pack_b(z, 3)), z)
    x = _block(12, 8)
    assert padding_of(pack_a(x, 4)).size == 0
    assert padding_of(pack_b(x, 4)).size == 0


def test_packing_from_strided_window():
    parent = _block(20, 30)
    window = parent[3:11, 5:19]
    assert leading_dimension(window) == 20
    assert np.array_equal(unpack_a(pack_a(window, 6)), window)
    assert np.array_equal(unpack_b(pack_b(window, 6)), window)


def test_cooperative_ranges_fill_disjoint_panels():
    x = _block(23, 7)
    whole = pack_a(x, 4).storage.copy()
    out = aligned_empty(a_capacity(23, 7, 4))
    out[:] = np.nan
    pack_a(x, 4, out, 0, 2)
    assert np.all(np.isnan(out[2 * 4 * 7:]))
    pack_a(x, 4, out, 2, 6)
    assert np.array_equal(out, whole)


def test_buffer_too_small_and_empty_block():
    with pytest.raises(ValueError):
        pack_a(_block(5, 3), 4, out=np.empty(10))
    with pytest.raises(ValueError):
        pack_b(_block(3, 10), 8, out=np.empty(47))
    with pytest.raises(ValueError):
        pack_a(np.zeros((0, 3), order="F"), 4)


def test_aligned_empty_alignment():
    for n in (1, 7, 100):
        for align in (64, 128):
            buf = aligned_empty(n, align)
            assert buf.size == n and buf.ctypes.data % align == 0


def test_check_view():
    check_view(_block(3, 3))
    with pytest.raises(ValueError):
        check_view(np.ascontiguousarray(_block(3, 3)))
    with pytest.raises(TypeError):
        check_view(np.zeros((3, 3), dtype=np.float32, order="F"))


def test_fault_injection_pollutes_padding(monkeypatch):
    monkeypatch.setenv(FAULT_ENV, "pack-padding")
    assert np.all(padding_of(pack_a(_block(5, 3), 4)) == 1.0)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_round_trip_and_padding_purity(rows, cols, r, seed):
    x = _block(rows, cols, seed)
    for pack, unpack in ((pack_a, unpack_a), (pack_b, unpack_b)):
        buf = pack(x, r)
        assert np.array_equal(unpack(buf), x)
        pad = padding_of(buf)
        assert np.all(pad == 0.0) and not np.any(np.signbit(pad))


@given(st.integers(1, 600), st.integers(1, 600), st.integers(1, 16))
def test_buffer_size_law(mc, kc, mr):
    elems = a_capacity(mc, kc, mr)
    assert elems == -(-mc // mr) * mr * kc
    assert b_capacity(kc, mc, mr) == elems
    if mc % mr == 0:
        rep = ccp.occupancy_report(_carmel(), MicroKernelShape(mr, 1), ccp.CcpTriple(mc, 1, kc))
        assert elems * 8 == rep.ac_bytes


def _carmel():
    from gemmlab.hwdesc import load_machine

    return load_machine("carmel")
