"""Machine descriptions: cache hierarchy and SIMD register file.

A machine is described by a small JSON document::

    {
      "name": "carmel",
      "registers": {"simd_bits": 128, "count": 32, "element_bits": 64},
      "caches": [
        {"level": 1, "size_kib": 64, "assoc": 4, "line_bytes": 64, "shared_by_cores": 1},
        ...
      ],
      "static_ccps": {"mc": 120, "nc": 3072, "kc": 240},
      "kernels": [{"shape": "12x4", "vector_dim": "m"}, {"shape": "6x8"}]
    }

``static_ccps`` and ``kernels`` are optional. A cache may give ``size_bytes``
instead of ``size_kib`` when its size is not a whole number of KiB.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Tuple, Union


class MachineDescError(ValueError):
    """Malformed or inconsistent machine description.

    ``path`` names the offending field, e.g. ``caches[1].assoc``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class CacheLevel:
    level: int
    size_bytes: int
    associativity: int
    line_bytes: int
    shared_by_cores: int = 1

    def __post_init__(self):
        if self.level < 1:
            raise MachineDescError("level", f"must be >= 1, got {self.level}")
        if self.associativity < 1:
            raise MachineDescError("assoc", f"must be >= 1, got {self.associativity}")
        if self.line_bytes < 1:
            raise MachineDescError("line_bytes", f"must be >= 1, got {self.line_bytes}")
        if self.shared_by_cores < 1:
            raise MachineDescError("shared_by_cores", f"must be >= 1, got {self.shared_by_cores}")
        set_bytes = self.associativity * self.line_bytes
        if self.size_bytes <= 0 or self.size_bytes % set_bytes:
            raise MachineDescError(
                "size",
                f"{self.size_bytes} bytes is not a positive multiple of "
                f"assoc x line = {set_bytes}",
            )

    @property
    def sets(self) -> int:
        return self.size_bytes // (self.associativity * self.line_bytes)


@dataclass(frozen=True)
class RegisterFile:
    simd_bits: int
    register_count: int
    element_bits: int = 64

    def __post_init__(self):
        if self.element_bits <= 0 or self.simd_bits <= 0 or self.simd_bits % self.element_bits:
            raise MachineDescError(
                "registers.simd_bits",
                f"{self.simd_bits} is not a positive multiple of element_bits={self.element_bits}",
            )
        if self.register_count < 1:
            raise MachineDescError("registers.count", f"must be >= 1, got {self.register_count}")

    @property
    def lanes(self) -> int:
        return self.simd_bits // self.element_bits


@dataclass(frozen=True)
class KernelPreference:
    """One entry of a machine's ranked micro-kernel list."""

    m_r: int
    n_r: int
    vector_dim: str = "n"


@dataclass(frozen=True)
class CacheHierarchy:
    name: str
    levels: Tuple[CacheLevel, ...]
    registers: RegisterFile
    static_ccps: Optional[Tuple[int, int, int]] = None
    kernels: Tuple[KernelPreference, ...] = ()
    comment: str = field(default="", compare=True)

    def __post_init__(self):
        if not self.levels:
            raise MachineDescError("caches", "at least one cache level is required")
        for i, (lo, hi) in enumerate(zip(self.levels, self.levels[1:])):
            if hi.level <= lo.level:
                raise MachineDescError(
                    f"caches[{i + 1}].level", "levels must be strictly increasing"
                )
            if hi.size_bytes < lo.size_bytes:
                raise MachineDescError(
                    f"caches[{i + 1}].size", "sizes must be non-decreasing across levels"
                )

    def level(self, ordinal: int) -> Optional[CacheLevel]:
        for lvl in self.levels:
            if lvl.level == ordinal:
                return lvl
        return None

    @property
    def l1(self) -> CacheLevel:
        return self.levels[0]

    @property
    def l2(self) -> Optional[CacheLevel]:
        return self.level(2)

    @property
    def l3(self) -> Optional[CacheLevel]:
        return self.level(3)


def way_capacity(lvl: CacheLevel) -> int:
    """Bytes held by one way of ``lvl`` (all sets)."""
    return lvl.size_bytes // lvl.associativity


def _require(obj: dict, key: str, path: str, kind=int) -> Any:
    if key not in obj:
        raise MachineDescError(f"{path}{key}", "missing field")
    value = obj[key]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise MachineDescError(f"{path}{key}", f"expected integer, got {value!r}")
    elif not isinstance(value, kind):
        raise MachineDescError(f"{path}{key}", f"expected {kind.__name__}, got {value!r}")
    return value


def _parse_shape(text: str, path: str) -> Tuple[int, int]:
    try:
        m, n = text.lower().split("x")
        return int(m), int(n)
    except (AttributeError, ValueError):
        raise MachineDescError(path, f"expected shape like '6x8', got {text!r}") from None


def hierarchy_from_dict(doc: dict) -> CacheHierarchy:
    if not isinstance(doc, dict):
        raise MachineDescError("", "top level must be a JSON object")
    name = _require(doc, "name", "", str)

    regs = doc.get("registers")
    if not isinstance(regs, dict):
        raise MachineDescError("registers", "missing or not an object")
    registers = RegisterFile(
        simd_bits=_require(regs, "simd_bits", "registers."),
        register_count=_require(regs, "count", "registers."),
        element_bits=_require(regs, "element_bits", "registers."),
    )

    caches = doc.get("caches")
    if not isinstance(caches, list) or not caches:
        raise MachineDescError("caches", "must be a non-empty array")
    levels = []
    for i, c in enumerate(caches):
        path = f"caches[{i}]."
        if not isinstance(c, dict):
            raise MachineDescError(f"caches[{i}]", "must be an object")
        if "size_kib" in c:
            kib = c["size_kib"]
            if isinstance(kib, bool) or not isinstance(kib, (int, float)):
                raise MachineDescError(path + "size_kib", f"expected number, got {kib!r}")
            size = kib * 1024
            if size != int(size):
                raise MachineDescError(path + "size_kib", "does not give a whole number of bytes")
            size = int(size)
        elif "size_bytes" in c:
            size = _require(c, "size_bytes", path)
        else:
            raise MachineDescError(path + "size_kib", "missing field")
        fields_ = dict(
            level=_require(c, "level", path),
            size_bytes=size,
            associativity=_require(c, "assoc", path),
            line_bytes=_require(c, "line_bytes", path),
            shared_by_cores=c.get("shared_by_cores", 1),
        )
        try:
            levels.append(CacheLevel(**fields_))
        except MachineDescError as exc:
            raise MachineDescError(path + exc.path, str(exc).split(": ", 1)[-1]) from None

    static = None
    if doc.get("static_ccps") is not None:
        s = doc["static_ccps"]
        static = tuple(_require(s, key, "static_ccps.") for key in ("mc", "nc", "kc"))
        if min(static) < 1:
            raise MachineDescError("static_ccps", "all values must be positive")

    kernels = []
    for i, kdoc in enumerate(doc.get("kernels", [])):
        path = f"kernels[{i}]"
        m_r, n_r = _parse_shape(kdoc.get("shape") if isinstance(kdoc, dict) else kdoc, path + ".shape")
        vdim = kdoc.get("vector_dim", "n") if isinstance(kdoc, dict) else "n"
        if vdim not in ("m", "n"):
            raise MachineDescError(path + ".vector_dim", f"must be 'm' or 'n', got {vdim!r}")
        kernels.append(KernelPreference(m_r, n_r, vdim))

    return CacheHierarchy(
        name=name,
        levels=tuple(levels),
        registers=registers,
        static_ccps=static,
        kernels=tuple(kernels),
        comment=doc.get("comment", ""),
    )


def parse_machine_desc(text: str) -> CacheHierarchy:
    """Parse and validate a machine-description JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MachineDescError("", f"malformed JSON: {exc}") from None
    return hierarchy_from_dict(doc)


def hierarchy_to_dict(h: CacheHierarchy) -> dict:
    caches = []
    for lvl in h.levels:
        c = {"level": lvl.level}
        if lvl.size_bytes % 1024 == 0:
            c["size_kib"] = lvl.size_bytes // 1024
        else:
            c["size_bytes"] = lvl.size_bytes
        c.update(assoc=lvl.associativity, line_bytes=lvl.line_bytes,
                 shared_by_cores=lvl.shared_by_cores)
        caches.append(c)
    doc = {"name": h.name}
    if h.comment:
        doc["comment"] = h.comment
    doc["registers"] = {
        "simd_bits": h.registers.simd_bits,
        "count": h.registers.register_count,
        "element_bits": h.registers.element_bits,
    }
    doc["caches"] = caches
    if h.static_ccps is not None:
        doc["static_ccps"] = dict(zip(("mc", "nc", "kc"), h.static_ccps))
    if h.kernels:
        doc["kernels"] = [
            {"shape": f"{k.m_r}x{k.n_r}", "vector_dim": k.vector_dim} for k in h.kernels
        ]
    return doc


def serialize_machine_desc(h: CacheHierarchy) -> str:
    return json.dumps(hierarchy_to_dict(h), indent=2) + "\n"


SHIPPED_MACHINES = ("carmel", "epyc7282")


def load_machine(name_or_path: Union[str, Path]) -> CacheHierarchy:
    """Load a shipped machine by name (``carmel``) or a description file by path."""
    p = Path(name_or_path)
    if p.suffix == ".json" and p.exists():
        return parse_machine_desc(p.read_text(encoding="utf-8"))
    stem = p.stem if p.suffix == ".json" else str(name_or_path)
    if stem in SHIPPED_MACHINES:
        text = resources.files("gemmlab.machines").joinpath(f"{stem}.json").read_text("utf-8")
        return parse_machine_desc(text)
    raise FileNotFoundError(f"no machine description at {name_or_path!s}")
