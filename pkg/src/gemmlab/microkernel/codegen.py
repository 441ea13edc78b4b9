"""Source generator for the register-tiled micro-kernels.

Each shape gets a kernel whose m_r x n_r accumulators are scalar locals, so
LLVM keeps them in vector registers, plus a macro-kernel (loops G4/G5) bound
to that kernel. Regenerate after editing the templates::

    python3 -m gemmlab.microkernel.codegen > src/gemmlab/microkernel/_unrolled.py
"""

import sys

SHAPES = ((6, 8), (8, 6), (4, 10), (4, 12), (10, 4), (12, 4))

HEADER = '''\
# Generated by gemmlab.microkernel.codegen; do not edit.
import numpy as np
from numba import njit

from gemmlab.microkernel.generic import kernel_generic
'''

MACRO = '''

@njit(nogil=True, cache=True)
def macro_{name}(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
    tmp = np.zeros((mr, nr))
    mpanels = (mc + mr - 1) // mr
    for jp in range(jp_lo, jp_hi):
        jr = jp * nr
        nlive = min(nr, nc - jr)
        bo = jp * nr * kc
        for ip in range(mpanels):
            ir = ip * mr
            mlive = min(mr, mc - ir)
            ao = ip * mr * kc
            if mlive == mr and nlive == nr:
                kernel_{name}(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_{name}(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]
'''


def kernel_source(mr, nr):
    name = f"{mr}x{nr}"
    out = [
        "",
        "",
        "@njit(nogil=True, cache=True)",
        f"def kernel_{name}(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):",
    ]
    out += [f"    c{i}_{j} = 0.0" for i in range(mr) for j in range(nr)]
    out += [
        "    for p in range(kc):",
        f"        pa = ao + p * {mr}",
        f"        pb = bo + p * {nr}",
    ]
    out += [f"        a{i} = a[pa + {i}]" for i in range(mr)]
    out += [f"        b{j} = b[pb + {j}]" for j in range(nr)]
    out += [f"        c{i}_{j} += a{i} * b{j}" for i in range(mr) for j in range(nr)]
    out.append("    if beta == 0.0:")
    out += [
        f"        c[ci + {i}, cj + {j}] = alpha * c{i}_{j}"
        for j in range(nr) for i in range(mr)
    ]
    out.append("    else:")
    out += [
        f"        c[ci + {i}, cj + {j}] = beta * c[ci + {i}, cj + {j}] + alpha * c{i}_{j}"
        for j in range(nr) for i in range(mr)
    ]
    return "\n".join(out) + "\n"


def module_source(shapes=SHAPES):
    parts = [HEADER, MACRO.format(name="generic")]
    for mr, nr in shapes:
        parts.append(kernel_source(mr, nr))
        parts.append(MACRO.format(name=f"{mr}x{nr}"))
    parts.append("\n\nSPECIALIZED = {\n")
    for mr, nr in shapes:
        parts.append(f"    ({mr}, {nr}): (kernel_{mr}x{nr}, macro_{mr}x{nr}),\n")
    parts.append("}\n")
    return "".join(parts)


if __name__ == "__main__":
    sys.stdout.write(module_source())
