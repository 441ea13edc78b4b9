"""Packing of operand blocks into A_c / B_c and column-major matrix views.

Matrices are numpy float64 arrays with unit row stride (Fortran order, or a
window of one), i.e. column-major with leading dimension ``strides[1] // 8``.

Packed layouts (``r`` is m_r for A_c and n_r for B_c)::

    A_c: panel i = rows [i*m_r, (i+1)*m_r), stored as k_c columns of m_r
         contiguous elements; element (row, p) of panel i at i*m_r*k_c + p*m_r + row
    B_c: panel j = cols [j*n_r, (j+1)*n_r), stored as k_c rows of n_r
         contiguous elements; element (p, col) of panel j at j*n_r*k_c + p*n_r + col

Rows (A) or columns (B) past the logical edge are filled with +0.0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from numba import njit

ELEM_BYTES = 8
DEFAULT_ALIGN = 64

# Set to "pack-padding" to fill padding with 1.0 (self-test of the verifiers).
FAULT_ENV = "GEMMLAB_INJECT_FAULT"


def _pad_value() -> float:
    return 1.0 if os.environ.get(FAULT_ENV) == "pack-padding" else 0.0


def column_major(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.float64, order="F")


def check_view(x: np.ndarray, name: str = "matrix") -> np.ndarray:
    if not isinstance(x, np.ndarray) or x.ndim != 2 or x.dtype != np.float64:
        raise TypeError(f"{name} must be a 2-D float64 numpy array")
    if x.size and x.shape[0] > 1 and x.strides[0] != ELEM_BYTES:
        raise ValueError(f"{name} is not column-major (row stride {x.strides[0]} bytes)")
    return x


def leading_dimension(x: np.ndarray) -> int:
    return max(x.shape[0], x.strides[1] // ELEM_BYTES) if x.shape[1] > 1 else x.shape[0]


def aligned_empty(n: int, align: int = DEFAULT_ALIGN) -> np.ndarray:
    """1-D float64 buffer of ``n`` elements whose data starts on an ``align``-byte boundary."""
    raw = np.empty(n + align // ELEM_BYTES, dtype=np.float64)
    shift = (-raw.ctypes.data % align) // ELEM_BYTES
    return raw[shift:shift + n]


@dataclass
class PackedBuffer:
    storage: np.ndarray
    panel: int
    rows: int
    cols: int
    form: str  # "A" or "B"

    @property
    def panels(self) -> int:
        live = self.rows if self.form == "A" else self.cols
        return -(-live // self.panel)

    @property
    def padded_rows(self) -> int:
        return self.panels * self.panel if self.form == "A" else self.rows

    @property
    def padded_cols(self) -> int:
        return self.panels * self.panel if self.form == "B" else self.cols

    @property
    def used(self) -> int:
        return self.padded_rows * self.padded_cols


def a_capacity(m_c: int, k_c: int, m_r: int) -> int:
    return -(-m_c // m_r) * m_r * k_c


def b_capacity(k_c: int, n_c: int, n_r: int) -> int:
    return k_c * -(-n_c // n_r) * n_r


@njit(nogil=True, cache=True)
def pack_a_panels(src, mr, buf, lo, hi, pad):
    m, kc = src.shape
    for ip in range(lo, hi):
        base = ip * mr * kc
        r0 = ip * mr
        for p in range(kc):
            off = base + p * mr
            for r in range(mr):
                i = r0 + r
                buf[off + r] = src[i, p] if i < m else pad


@njit(nogil=True, cache=True)
def pack_b_panels(src, nr, buf, lo, hi, pad):
    kc, n = src.shape
    for jp in range(lo, hi):
        base = jp * nr * kc
        c0 = jp * nr
        for p in range(kc):
            off = base + p * nr
            for c in range(nr):
                j = c0 + c
                buf[off + c] = src[p, j] if j < n else pad


def pack_a(src: np.ndarray, m_r: int, out: np.ndarray = None, lo: int = 0, hi: int = None) -> PackedBuffer:
    """Pack an m_c x k_c block into m_r-tall micro-panels.

    ``lo``/``hi`` restrict the call to a range of micro-panels so several
    workers can fill disjoint parts of one buffer.
    """
    m, k = src.shape
    if m < 1 or k < 1:
        raise ValueError(f"cannot pack an empty {m}x{k} block")
    need = a_capacity(m, k, m_r)
    if out is None:
        out = aligned_empty(need)
    elif out.size < need:
        raise ValueError(f"A_c buffer holds {out.size} elements, {need} needed")
    panels = -(-m // m_r)
    pack_a_panels(src, m_r, out, lo, panels if hi is None else hi, _pad_value())
    return PackedBuffer(out, m_r, m, k, "A")


def pack_b(src: np.ndarray, n_r: int, out: np.ndarray = None, lo: int = 0, hi: int = None) -> PackedBuffer:
    """Pack a k_c x n_c block into n_r-wide micro-panels."""
    k, n = src.shape
    if n < 1 or k < 1:
        raise ValueError(f"cannot pack an empty {k}x{n} block")
    need = b_capacity(k, n, n_r)
    if out is None:
        out = aligned_empty(need)
    elif out.size < need:
        raise ValueError(f"B_c buffer holds {out.size} elements, {need} needed")
    panels = -(-n // n_r)
    pack_b_panels(src, n_r, out, lo, panels if hi is None else hi, _pad_value())
    return PackedBuffer(out, n_r, k, n, "B")


def _a_padded(buf: PackedBuffer) -> np.ndarray:
    """(padded_rows x cols) dense view of an A-form buffer."""
    mr, k, p = buf.panel, buf.cols, buf.panels
    # storage index = ip*mr*k + col*mr + r
    return buf.storage[: p * mr * k].reshape(p, k, mr).transpose(0, 2, 1).reshape(p * mr, k)


def _b_padded(buf: PackedBuffer) -> np.ndarray:
    nr, k, p = buf.panel, buf.rows, buf.panels
    # storage index = jp*nr*k + row*nr + c
    return buf.storage[: p * nr * k].reshape(p, k, nr).transpose(1, 0, 2).reshape(k, p * nr)


def unpack_a(buf: PackedBuffer) -> np.ndarray:
    return np.asfortranarray(_a_padded(buf)[: buf.rows])


def unpack_b(buf: PackedBuffer) -> np.ndarray:
    return np.asfortranarray(_b_padded(buf)[:, : buf.cols])


def padding_of(buf: PackedBuffer) -> np.ndarray:
    """All padding elements of ``buf`` as a flat array."""
    if buf.form == "A":
        return _a_padded(buf)[buf.rows:].ravel()
    return _b_padded(buf)[:, buf.cols:].ravel()
