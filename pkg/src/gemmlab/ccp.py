"""Cache configuration parameters (m_c, n_c, k_c) for the blocked GEMM.

The model budgets whole cache ways. In each level one way per set is kept
for the C stream and the rest is split between the two operands that live
there: A_r/B_r in L1 (ratio m_r : n_r), A_c/B_r in L2 (ratio k_c : n_r) and
A_c/B_c in L3. k_c follows from L1, then m_c from L2, then n_c from L3.

The *original* model derives each parameter from the previous one before
any clamping to the problem size; the *refined* model clamps k_c to k
before deriving m_c, and m_c to m before deriving n_c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from gemmlab.hwdesc import CacheHierarchy, way_capacity

ELEM_BYTES = 8
MC_GRANULE = 16

STATIC = "static"
ORIGINAL = "original-model"
REFINED = "refined-model"
PROVENANCES = (STATIC, ORIGINAL, REFINED)

# CLI spellings
POLICY_NAMES = {"static": STATIC, "original": ORIGINAL, "refined": REFINED}


class ModelError(ValueError):
    """The analytical model has no valid answer for this hierarchy/kernel."""


@dataclass(frozen=True)
class CcpTriple:
    m_c: int
    n_c: int
    k_c: int
    provenance: str = STATIC
    l1_ways_for_A: Optional[int] = None
    l1_ways_for_B: Optional[int] = None
    l2_ways_for_A: Optional[int] = None

    def __post_init__(self):
        if min(self.m_c, self.n_c, self.k_c) < 1:
            raise ValueError(f"CCPs must be >= 1, got {self.as_tuple()}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.m_c, self.n_c, self.k_c)


@dataclass(frozen=True)
class StaticProfile:
    name: str
    m_c0: int
    n_c0: int
    k_c0: int

    def __post_init__(self):
        if min(self.m_c0, self.n_c0, self.k_c0) < 1:
            raise ValueError("static CCPs must be positive")

    @classmethod
    def for_machine(cls, hier: CacheHierarchy) -> "StaticProfile":
        if hier.static_ccps is None:
            raise ModelError(f"machine {hier.name} ships no static CCP profile")
        return cls(hier.name, *hier.static_ccps)


@dataclass(frozen=True)
class OccupancyReport:
    br_bytes: int
    br_fraction_of_l1: float
    br_max_fraction: Optional[float]
    ac_bytes: int
    ac_fraction_of_l2: float
    ac_max_fraction: Optional[float]


def _level(hier: CacheHierarchy, ordinal: int, what: str):
    lvl = hier.level(ordinal)
    if lvl is None:
        raise ModelError(f"{hier.name} has no L{ordinal} cache ({what})")
    return lvl


def derive_kc(hier: CacheHierarchy, mk, elem_bytes: int = ELEM_BYTES) -> Tuple[int, int, int]:
    """Return ``(k_c, l1_ways_for_A, l1_ways_for_B)``.

    k_c is the largest depth whose A_r fits the ways given to A; it is also
    capped so B_r fits its own ways, which only binds for narrow-tall
    kernels such as 4x10.
    """
    l1 = hier.l1
    w = l1.associativity
    if w < 3:
        raise ModelError(f"L1 associativity {w} < 3 leaves no way for A or B after C")
    mr, nr = mk.m_r, mk.n_r
    ways_a = max(1, (w - 1) * mr // (mr + nr))
    ways_b = w - 1 - ways_a
    if ways_b < 1:
        raise ModelError(f"L1 associativity {w} leaves no way for B_r with {mr}x{nr}")
    cap = way_capacity(l1)
    kc = min(ways_a * cap // (mr * elem_bytes), ways_b * cap // (nr * elem_bytes))
    if kc < 1:
        raise ModelError(f"one L1 way ({cap} bytes) cannot hold a {mr}-element column of A_r")
    return kc, ways_a, ways_b


def derive_mc(hier: CacheHierarchy, mk, k_c: int, elem_bytes: int = ELEM_BYTES) -> Tuple[int, int]:
    """Return ``(m_c, l2_ways_for_A)`` for a given depth ``k_c``."""
    if k_c < 1:
        raise ModelError(f"k_c must be >= 1, got {k_c}")
    l2 = _level(hier, 2, "needed for m_c")
    w = l2.associativity
    if w < 3:
        raise ModelError(f"L2 associativity {w} < 3 leaves no way for A_c after C and B_r")
    ways_a = max(1, (w - 1) * k_c // (k_c + mk.n_r))
    raw = ways_a * way_capacity(l2) // (k_c * elem_bytes)
    mc = raw // MC_GRANULE * MC_GRANULE
    if mc < mk.m_r:
        raise ModelError(f"m_c={mc} (raw {raw}) is smaller than m_r={mk.m_r} at k_c={k_c}")
    return mc, ways_a


def derive_nc(hier: CacheHierarchy, mk, k_c: int, m_c: int,
              elem_bytes: int = ELEM_BYTES) -> Optional[int]:
    """n_c from the L3 ways left after A_c and C; ``None`` when there is no L3."""
    l3 = hier.l3
    if l3 is None:
        return None
    cap = way_capacity(l3)
    ways_a = math.ceil(m_c * k_c * elem_bytes / cap)
    ways_b = max(1, l3.associativity - 1 - ways_a)
    raw = ways_b * cap // (k_c * elem_bytes)
    return max(mk.n_r, raw // mk.n_r * mk.n_r)


def _clamp_nc(nc: Optional[int], n: int) -> int:
    return n if nc is None else min(n, nc)


def _check_dims(m, n, k):
    if min(m, n, k) < 1:
        raise ValueError(f"problem dimensions must be >= 1, got m={m}, n={n}, k={k}")


def refined_ccps(hier: CacheHierarchy, mk, m: int, n: int, k: int) -> CcpTriple:
    _check_dims(m, n, k)
    kc_model, l1a, l1b = derive_kc(hier, mk)
    kc = min(k, kc_model)
    mc_model, l2a = derive_mc(hier, mk, kc)
    mc = min(m, mc_model)
    nc = _clamp_nc(derive_nc(hier, mk, kc, mc), n)
    return CcpTriple(mc, nc, kc, REFINED, l1a, l1b, l2a)


def original_ccps(hier: CacheHierarchy, mk, m: int, n: int, k: int) -> CcpTriple:
    _check_dims(m, n, k)
    kc, l1a, l1b = derive_kc(hier, mk)
    mc, l2a = derive_mc(hier, mk, kc)
    nc = derive_nc(hier, mk, kc, mc)
    return CcpTriple(min(m, mc), _clamp_nc(nc, n), min(k, kc), ORIGINAL, l1a, l1b, l2a)


def static_ccps(profile: StaticProfile, m: int, n: int, k: int) -> CcpTriple:
    _check_dims(m, n, k)
    return CcpTriple(min(m, profile.m_c0), min(n, profile.n_c0), min(k, profile.k_c0), STATIC)


def ccps_for(policy: str, hier: CacheHierarchy, mk, m: int, n: int, k: int) -> CcpTriple:
    """Dispatch on a policy name (``static``/``original``/``refined`` or a provenance)."""
    policy = POLICY_NAMES.get(policy, policy)
    if policy == REFINED:
        return refined_ccps(hier, mk, m, n, k)
    if policy == ORIGINAL:
        return original_ccps(hier, mk, m, n, k)
    if policy == STATIC:
        return static_ccps(StaticProfile.for_machine(hier), m, n, k)
    raise ValueError(f"unknown CCP policy {policy!r}")


def occupancy_report(hier: CacheHierarchy, mk, ccps: CcpTriple,
                     elem_bytes: int = ELEM_BYTES) -> OccupancyReport:
    l1 = hier.l1
    l2 = _level(hier, 2, "needed for the A_c report")
    br = ccps.k_c * mk.n_r * elem_bytes
    ac = ccps.m_c * ccps.k_c * elem_bytes
    if ccps.provenance == STATIC or ccps.l1_ways_for_B is None:
        br_max = ac_max = None
    else:
        br_max = ccps.l1_ways_for_B / l1.associativity
        ac_max = ccps.l2_ways_for_A / l2.associativity
    return OccupancyReport(br, br / l1.size_bytes, br_max, ac, ac / l2.size_bytes, ac_max)


def flops_per_memop(mk, k_c: int) -> float:
    """Arithmetic intensity of one micro-kernel call: C_r is read and written once."""
    mr, nr = mk.m_r, mk.n_r
    if min(mr, nr, k_c) < 1:
        raise ValueError("flops_per_memop needs positive m_r, n_r, k_c")
    return float(Fraction(2 * mr * nr * k_c, 2 * mr * nr + mr * k_c + k_c * nr))


PROFILE_PREFERENCE = "profile"
MODEL_SCORE = "model-score"


def select_kernel(candidates: Sequence, hier: CacheHierarchy, policy: str,
                  m: int, n: int, k: int):
    """Pick a micro-kernel and its refined CCPs for an m x n x k product.

    ``profile``: the first candidate (in the given ranked order) that fits the
    register file. ``model-score``: the candidate with the highest predicted
    L2 occupancy, then flops/memop, then tile area; ties go to the
    lexicographically smallest (m_r, n_r), so candidate order is irrelevant.
    """
    from gemmlab.microkernel import register_budget

    if not candidates:
        raise ValueError("no candidate micro-kernels")
    fitting = [
        c for c in candidates
        if register_budget(c.shape, hier.registers, getattr(c, "vector_dim", "n"))[0]
    ]
    if not fitting:
        raise ModelError(f"no candidate fits the {hier.registers.register_count}-register file")

    if policy == PROFILE_PREFERENCE:
        entry = fitting[0]
        return entry, refined_ccps(hier, entry.shape, m, n, k)
    if policy != MODEL_SCORE:
        raise ValueError(f"unknown selection policy {policy!r}")

    scored = []
    for c in fitting:
        try:
            ccps = refined_ccps(hier, c.shape, m, n, k)
        except ModelError:
            continue
        rep = occupancy_report(hier, c.shape, ccps)
        key = (
            -rep.ac_fraction_of_l2,
            -flops_per_memop(c.shape, ccps.k_c),
            -(c.m_r * c.n_r),
            (c.m_r, c.n_r),
            c.kind != "simd-specialized",
        )
        scored.append((key, c, ccps))
    if not scored:
        raise ModelError("the model has no valid CCPs for any candidate")
    _, entry, ccps = min(scored, key=lambda t: t[0])
    return entry, ccps
