"""Micro-kernels: k_c rank-1 updates on an m_r x n_r tile of C.

Every kernel shares one calling convention::

    kernel(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj)

``a``/``b`` are packed buffers (see :mod:`gemmlab.pack`) and ``ao``/``bo`` the
offsets of the micro-panels inside them. The tile ``c[ci:ci+mr, cj:cj+nr]``
becomes ``beta * c + alpha * sum_p a(:, p) b(p, :)`` with the sum taken in
ascending p; ``beta == 0`` overwrites c without reading it. Generic and
unrolled kernels perform the same operations per element, so they agree
bitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from gemmlab.hwdesc import RegisterFile
from gemmlab.microkernel._unrolled import SPECIALIZED, kernel_generic, macro_generic

GENERIC = "generic"
SIMD = "simd-specialized"

# Shapes of the generic fallbacks appended to every registry lookup.
FALLBACK_SHAPES = ((6, 8), (8, 6), (4, 10), (4, 12), (10, 4), (12, 4))


@dataclass(frozen=True, order=True)
class MicroKernelShape:
    m_r: int
    n_r: int

    def __post_init__(self):
        if self.m_r < 1 or self.n_r < 1:
            raise ValueError(f"micro-kernel dimensions must be >= 1, got {self.m_r}x{self.n_r}")

    def __str__(self):
        return f"{self.m_r}x{self.n_r}"

    @classmethod
    def parse(cls, text: str) -> "MicroKernelShape":
        try:
            m, n = text.lower().split("x")
            return cls(int(m), int(n))
        except ValueError:
            raise ValueError(f"expected a shape like '6x8', got {text!r}") from None


@dataclass(frozen=True)
class MicroKernelEntry:
    shape: MicroKernelShape
    kind: str
    kernel: Callable = field(repr=False, compare=False)
    macro: Callable = field(repr=False, compare=False)
    vector_dim: str = "n"
    requires_lane_multiple: bool = False

    @property
    def m_r(self) -> int:
        return self.shape.m_r

    @property
    def n_r(self) -> int:
        return self.shape.n_r

    def __str__(self):
        return f"{self.shape}/{'simd' if self.kind == SIMD else 'generic'}"


def _as_shape(shape) -> MicroKernelShape:
    if isinstance(shape, MicroKernelShape):
        return shape
    if isinstance(shape, str):
        return MicroKernelShape.parse(shape)
    return MicroKernelShape(*shape)


def register_budget(shape, regs: RegisterFile, vector_dim: str = "n") -> Tuple[bool, int]:
    """Vector registers needed to hold C_r plus one column of A_r and one row of B_r.

    ``vector_dim`` names the dimension that is split across SIMD lanes.
    """
    shape = _as_shape(shape)
    lanes = regs.lanes
    mr, nr = shape.m_r, shape.n_r
    if vector_dim == "m":
        mr, nr = nr, mr
    needed = mr * math.ceil(nr / lanes) + math.ceil(mr / lanes) + math.ceil(nr / lanes)
    return needed <= regs.register_count, needed


def generic_kernel_for(shape) -> MicroKernelEntry:
    shape = _as_shape(shape)
    return MicroKernelEntry(shape, GENERIC, kernel_generic, macro_generic)


def specialized_kernel_for(shape, vector_dim: str = "n") -> MicroKernelEntry:
    """Register-tiled kernel for one of the generated shapes."""
    shape = _as_shape(shape)
    try:
        kernel, macro = SPECIALIZED[(shape.m_r, shape.n_r)]
    except KeyError:
        raise KeyError(
            f"no unrolled kernel for {shape}; available: "
            + ", ".join(f"{m}x{n}" for m, n in SPECIALIZED)
        ) from None
    return MicroKernelEntry(shape, SIMD, kernel, macro, vector_dim, True)


def run_microkernel(entry: MicroKernelEntry, a_panel, b_panel, c_tile, k_c: int,
                    alpha: float = 1.0, beta_first: bool = False) -> None:
    """Apply one micro-kernel call to ``c_tile`` (an m_r x n_r view) in place."""
    mr, nr = entry.m_r, entry.n_r
    if c_tile.shape != (mr, nr):
        raise ValueError(f"c_tile has shape {c_tile.shape}, kernel is {entry.shape}")
    a = np.ascontiguousarray(a_panel, dtype=np.float64).reshape(-1)
    b = np.ascontiguousarray(b_panel, dtype=np.float64).reshape(-1)
    if a.size < mr * k_c or b.size < nr * k_c:
        raise ValueError("packed panels are shorter than k_c micro-columns/rows")
    entry.kernel(mr, nr, k_c, float(alpha), a, 0, b, 0, 0.0 if beta_first else 1.0, c_tile, 0, 0)


class RegistryError(ValueError):
    pass


class KernelRegistry:
    """Machine name -> ranked list of micro-kernels.

    Lookups always end with the generic fallbacks, so they never come back empty.
    """

    def __init__(self, fallback_shapes=FALLBACK_SHAPES):
        self._entries: Dict[str, List[MicroKernelEntry]] = {}
        self._fallbacks = [generic_kernel_for(s) for s in fallback_shapes]

    def register(self, entry: MicroKernelEntry, machine: str,
                 registers: Optional[RegisterFile] = None) -> None:
        bucket = self._entries.setdefault(machine, [])
        if any(e.shape == entry.shape and e.kind == entry.kind for e in bucket):
            raise RegistryError(f"{entry.shape} ({entry.kind}) already registered for {machine}")
        if entry.kind == SIMD:
            if registers is None:
                raise RegistryError("SIMD-specialized entries need the machine's register file")
            fits, needed = register_budget(entry.shape, registers, entry.vector_dim)
            if not fits:
                raise RegistryError(
                    f"{entry.shape} needs {needed} vector registers, "
                    f"{machine} has {registers.register_count}"
                )
        bucket.append(entry)

    def lookup(self, machine: str) -> List[MicroKernelEntry]:
        return list(self._entries.get(machine, ())) + list(self._fallbacks)

    def machines(self):
        return sorted(self._entries)


REGISTRY = KernelRegistry()


def registry_register(entry: MicroKernelEntry, machine: str,
                      registers: Optional[RegisterFile] = None) -> None:
    REGISTRY.register(entry, machine, registers)


def registry_lookup(machine: str) -> List[MicroKernelEntry]:
    return REGISTRY.lookup(machine)


def register_machine(hier, registry: Optional[KernelRegistry] = None) -> List[MicroKernelEntry]:
    """Register the ranked kernels named in a machine description."""
    registry = REGISTRY if registry is None else registry
    if hier.name not in registry.machines():
        for pref in hier.kernels:
            entry = specialized_kernel_for((pref.m_r, pref.n_r), pref.vector_dim)
            registry.register(entry, hier.name, hier.registers)
    return registry.lookup(hier.name)


__all__ = [
    "GENERIC", "SIMD", "MicroKernelShape", "MicroKernelEntry", "KernelRegistry",
    "RegistryError", "REGISTRY", "register_budget", "generic_kernel_for",
    "specialized_kernel_for", "run_microkernel", "registry_register",
    "registry_lookup", "register_machine",
]
