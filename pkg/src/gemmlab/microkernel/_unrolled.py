# Generated by gemmlab.microkernel.codegen; do not edit.
import numpy as np
from numba import njit

from gemmlab.microkernel.generic import kernel_generic


@njit(nogil=True, cache=True)
def macro_generic(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_generic(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_generic(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_6x8(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c0_4 = 0.0
    c0_5 = 0.0
    c0_6 = 0.0
    c0_7 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c1_4 = 0.0
    c1_5 = 0.0
    c1_6 = 0.0
    c1_7 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c2_4 = 0.0
    c2_5 = 0.0
    c2_6 = 0.0
    c2_7 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c3_4 = 0.0
    c3_5 = 0.0
    c3_6 = 0.0
    c3_7 = 0.0
    c4_0 = 0.0
    c4_1 = 0.0
    c4_2 = 0.0
    c4_3 = 0.0
    c4_4 = 0.0
    c4_5 = 0.0
    c4_6 = 0.0
    c4_7 = 0.0
    c5_0 = 0.0
    c5_1 = 0.0
    c5_2 = 0.0
    c5_3 = 0.0
    c5_4 = 0.0
    c5_5 = 0.0
    c5_6 = 0.0
    c5_7 = 0.0
    for p in range(kc):
        pa = ao + p * 6
        pb = bo + p * 8
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        a4 = a[pa + 4]
        a5 = a[pa + 5]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        b4 = b[pb + 4]
        b5 = b[pb + 5]
        b6 = b[pb + 6]
        b7 = b[pb + 7]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c0_4 += a0 * b4
        c0_5 += a0 * b5
        c0_6 += a0 * b6
        c0_7 += a0 * b7
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c1_4 += a1 * b4
        c1_5 += a1 * b5
        c1_6 += a1 * b6
        c1_7 += a1 * b7
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c2_4 += a2 * b4
        c2_5 += a2 * b5
        c2_6 += a2 * b6
        c2_7 += a2 * b7
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c3_4 += a3 * b4
        c3_5 += a3 * b5
        c3_6 += a3 * b6
        c3_7 += a3 * b7
        c4_0 += a4 * b0
        c4_1 += a4 * b1
        c4_2 += a4 * b2
        c4_3 += a4 * b3
        c4_4 += a4 * b4
        c4_5 += a4 * b5
        c4_6 += a4 * b6
        c4_7 += a4 * b7
        c5_0 += a5 * b0
        c5_1 += a5 * b1
        c5_2 += a5 * b2
        c5_3 += a5 * b3
        c5_4 += a5 * b4
        c5_5 += a5 * b5
        c5_6 += a5 * b6
        c5_7 += a5 * b7
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 4, cj + 0] = alpha * c4_0
        c[ci + 5, cj + 0] = alpha * c5_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 4, cj + 1] = alpha * c4_1
        c[ci + 5, cj + 1] = alpha * c5_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 4, cj + 2] = alpha * c4_2
        c[ci + 5, cj + 2] = alpha * c5_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 4, cj + 3] = alpha * c4_3
        c[ci + 5, cj + 3] = alpha * c5_3
        c[ci + 0, cj + 4] = alpha * c0_4
        c[ci + 1, cj + 4] = alpha * c1_4
        c[ci + 2, cj + 4] = alpha * c2_4
        c[ci + 3, cj + 4] = alpha * c3_4
        c[ci + 4, cj + 4] = alpha * c4_4
        c[ci + 5, cj + 4] = alpha * c5_4
        c[ci + 0, cj + 5] = alpha * c0_5
        c[ci + 1, cj + 5] = alpha * c1_5
        c[ci + 2, cj + 5] = alpha * c2_5
        c[ci + 3, cj + 5] = alpha * c3_5
        c[ci + 4, cj + 5] = alpha * c4_5
        c[ci + 5, cj + 5] = alpha * c5_5
        c[ci + 0, cj + 6] = alpha * c0_6
        c[ci + 1, cj + 6] = alpha * c1_6
        c[ci + 2, cj + 6] = alpha * c2_6
        c[ci + 3, cj + 6] = alpha * c3_6
        c[ci + 4, cj + 6] = alpha * c4_6
        c[ci + 5, cj + 6] = alpha * c5_6
        c[ci + 0, cj + 7] = alpha * c0_7
        c[ci + 1, cj + 7] = alpha * c1_7
        c[ci + 2, cj + 7] = alpha * c2_7
        c[ci + 3, cj + 7] = alpha * c3_7
        c[ci + 4, cj + 7] = alpha * c4_7
        c[ci + 5, cj + 7] = alpha * c5_7
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 4, cj + 0] = beta * c[ci + 4, cj + 0] + alpha * c4_0
        c[ci + 5, cj + 0] = beta * c[ci + 5, cj + 0] + alpha * c5_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 4, cj + 1] = beta * c[ci + 4, cj + 1] + alpha * c4_1
        c[ci + 5, cj + 1] = beta * c[ci + 5, cj + 1] + alpha * c5_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 4, cj + 2] = beta * c[ci + 4, cj + 2] + alpha * c4_2
        c[ci + 5, cj + 2] = beta * c[ci + 5, cj + 2] + alpha * c5_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 4, cj + 3] = beta * c[ci + 4, cj + 3] + alpha * c4_3
        c[ci + 5, cj + 3] = beta * c[ci + 5, cj + 3] + alpha * c5_3
        c[ci + 0, cj + 4] = beta * c[ci + 0, cj + 4] + alpha * c0_4
        c[ci + 1, cj + 4] = beta * c[ci + 1, cj + 4] + alpha * c1_4
        c[ci + 2, cj + 4] = beta * c[ci + 2, cj + 4] + alpha * c2_4
        c[ci + 3, cj + 4] = beta * c[ci + 3, cj + 4] + alpha * c3_4
        c[ci + 4, cj + 4] = beta * c[ci + 4, cj + 4] + alpha * c4_4
        c[ci + 5, cj + 4] = beta * c[ci + 5, cj + 4] + alpha * c5_4
        c[ci + 0, cj + 5] = beta * c[ci + 0, cj + 5] + alpha * c0_5
        c[ci + 1, cj + 5] = beta * c[ci + 1, cj + 5] + alpha * c1_5
        c[ci + 2, cj + 5] = beta * c[ci + 2, cj + 5] + alpha * c2_5
        c[ci + 3, cj + 5] = beta * c[ci + 3, cj + 5] + alpha * c3_5
        c[ci + 4, cj + 5] = beta * c[ci + 4, cj + 5] + alpha * c4_5
        c[ci + 5, cj + 5] = beta * c[ci + 5, cj + 5] + alpha * c5_5
        c[ci + 0, cj + 6] = beta * c[ci + 0, cj + 6] + alpha * c0_6
        c[ci + 1, cj + 6] = beta * c[ci + 1, cj + 6] + alpha * c1_6
        c[ci + 2, cj + 6] = beta * c[ci + 2, cj + 6] + alpha * c2_6
        c[ci + 3, cj + 6] = beta * c[ci + 3, cj + 6] + alpha * c3_6
        c[ci + 4, cj + 6] = beta * c[ci + 4, cj + 6] + alpha * c4_6
        c[ci + 5, cj + 6] = beta * c[ci + 5, cj + 6] + alpha * c5_6
        c[ci + 0, cj + 7] = beta * c[ci + 0, cj + 7] + alpha * c0_7
        c[ci + 1, cj + 7] = beta * c[ci + 1, cj + 7] + alpha * c1_7
        c[ci + 2, cj + 7] = beta * c[ci + 2, cj + 7] + alpha * c2_7
        c[ci + 3, cj + 7] = beta * c[ci + 3, cj + 7] + alpha * c3_7
        c[ci + 4, cj + 7] = beta * c[ci + 4, cj + 7] + alpha * c4_7
        c[ci + 5, cj + 7] = beta * c[ci + 5, cj + 7] + alpha * c5_7


@njit(nogil=True, cache=True)
def macro_6x8(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_6x8(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_6x8(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_8x6(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c0_4 = 0.0
    c0_5 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c1_4 = 0.0
    c1_5 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c2_4 = 0.0
    c2_5 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c3_4 = 0.0
    c3_5 = 0.0
    c4_0 = 0.0
    c4_1 = 0.0
    c4_2 = 0.0
    c4_3 = 0.0
    c4_4 = 0.0
    c4_5 = 0.0
    c5_0 = 0.0
    c5_1 = 0.0
    c5_2 = 0.0
    c5_3 = 0.0
    c5_4 = 0.0
    c5_5 = 0.0
    c6_0 = 0.0
    c6_1 = 0.0
    c6_2 = 0.0
    c6_3 = 0.0
    c6_4 = 0.0
    c6_5 = 0.0
    c7_0 = 0.0
    c7_1 = 0.0
    c7_2 = 0.0
    c7_3 = 0.0
    c7_4 = 0.0
    c7_5 = 0.0
    for p in range(kc):
        pa = ao + p * 8
        pb = bo + p * 6
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        a4 = a[pa + 4]
        a5 = a[pa + 5]
        a6 = a[pa + 6]
        a7 = a[pa + 7]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        b4 = b[pb + 4]
        b5 = b[pb + 5]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c0_4 += a0 * b4
        c0_5 += a0 * b5
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c1_4 += a1 * b4
        c1_5 += a1 * b5
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c2_4 += a2 * b4
        c2_5 += a2 * b5
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c3_4 += a3 * b4
        c3_5 += a3 * b5
        c4_0 += a4 * b0
        c4_1 += a4 * b1
        c4_2 += a4 * b2
        c4_3 += a4 * b3
        c4_4 += a4 * b4
        c4_5 += a4 * b5
        c5_0 += a5 * b0
        c5_1 += a5 * b1
        c5_2 += a5 * b2
        c5_3 += a5 * b3
        c5_4 += a5 * b4
        c5_5 += a5 * b5
        c6_0 += a6 * b0
        c6_1 += a6 * b1
        c6_2 += a6 * b2
        c6_3 += a6 * b3
        c6_4 += a6 * b4
        c6_5 += a6 * b5
        c7_0 += a7 * b0
        c7_1 += a7 * b1
        c7_2 += a7 * b2
        c7_3 += a7 * b3
        c7_4 += a7 * b4
        c7_5 += a7 * b5
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 4, cj + 0] = alpha * c4_0
        c[ci + 5, cj + 0] = alpha * c5_0
        c[ci + 6, cj + 0] = alpha * c6_0
        c[ci + 7, cj + 0] = alpha * c7_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 4, cj + 1] = alpha * c4_1
        c[ci + 5, cj + 1] = alpha * c5_1
        c[ci + 6, cj + 1] = alpha * c6_1
        c[ci + 7, cj + 1] = alpha * c7_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 4, cj + 2] = alpha * c4_2
        c[ci + 5, cj + 2] = alpha * c5_2
        c[ci + 6, cj + 2] = alpha * c6_2
        c[ci + 7, cj + 2] = alpha * c7_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 4, cj + 3] = alpha * c4_3
        c[ci + 5, cj + 3] = alpha * c5_3
        c[ci + 6, cj + 3] = alpha * c6_3
        c[ci + 7, cj + 3] = alpha * c7_3
        c[ci + 0, cj + 4] = alpha * c0_4
        c[ci + 1, cj + 4] = alpha * c1_4
        c[ci + 2, cj + 4] = alpha * c2_4
        c[ci + 3, cj + 4] = alpha * c3_4
        c[ci + 4, cj + 4] = alpha * c4_4
        c[ci + 5, cj + 4] = alpha * c5_4
        c[ci + 6, cj + 4] = alpha * c6_4
        c[ci + 7, cj + 4] = alpha * c7_4
        c[ci + 0, cj + 5] = alpha * c0_5
        c[ci + 1, cj + 5] = alpha * c1_5
        c[ci + 2, cj + 5] = alpha * c2_5
        c[ci + 3, cj + 5] = alpha * c3_5
        c[ci + 4, cj + 5] = alpha * c4_5
        c[ci + 5, cj + 5] = alpha * c5_5
        c[ci + 6, cj + 5] = alpha * c6_5
        c[ci + 7, cj + 5] = alpha * c7_5
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 4, cj + 0] = beta * c[ci + 4, cj + 0] + alpha * c4_0
        c[ci + 5, cj + 0] = beta * c[ci + 5, cj + 0] + alpha * c5_0
        c[ci + 6, cj + 0] = beta * c[ci + 6, cj + 0] + alpha * c6_0
        c[ci + 7, cj + 0] = beta * c[ci + 7, cj + 0] + alpha * c7_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 4, cj + 1] = beta * c[ci + 4, cj + 1] + alpha * c4_1
        c[ci + 5, cj + 1] = beta * c[ci + 5, cj + 1] + alpha * c5_1
        c[ci + 6, cj + 1] = beta * c[ci + 6, cj + 1] + alpha * c6_1
        c[ci + 7, cj + 1] = beta * c[ci + 7, cj + 1] + alpha * c7_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 4, cj + 2] = beta * c[ci + 4, cj + 2] + alpha * c4_2
        c[ci + 5, cj + 2] = beta * c[ci + 5, cj + 2] + alpha * c5_2
        c[ci + 6, cj + 2] = beta * c[ci + 6, cj + 2] + alpha * c6_2
        c[ci + 7, cj + 2] = beta * c[ci + 7, cj + 2] + alpha * c7_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 4, cj + 3] = beta * c[ci + 4, cj + 3] + alpha * c4_3
        c[ci + 5, cj + 3] = beta * c[ci + 5, cj + 3] + alpha * c5_3
        c[ci + 6, cj + 3] = beta * c[ci + 6, cj + 3] + alpha * c6_3
        c[ci + 7, cj + 3] = beta * c[ci + 7, cj + 3] + alpha * c7_3
        c[ci + 0, cj + 4] = beta * c[ci + 0, cj + 4] + alpha * c0_4
        c[ci + 1, cj + 4] = beta * c[ci + 1, cj + 4] + alpha * c1_4
        c[ci + 2, cj + 4] = beta * c[ci + 2, cj + 4] + alpha * c2_4
        c[ci + 3, cj + 4] = beta * c[ci + 3, cj + 4] + alpha * c3_4
        c[ci + 4, cj + 4] = beta * c[ci + 4, cj + 4] + alpha * c4_4
        c[ci + 5, cj + 4] = beta * c[ci + 5, cj + 4] + alpha * c5_4
        c[ci + 6, cj + 4] = beta * c[ci + 6, cj + 4] + alpha * c6_4
        c[ci + 7, cj + 4] = beta * c[ci + 7, cj + 4] + alpha * c7_4
        c[ci + 0, cj + 5] = beta * c[ci + 0, cj + 5] + alpha * c0_5
        c[ci + 1, cj + 5] = beta * c[ci + 1, cj + 5] + alpha * c1_5
        c[ci + 2, cj + 5] = beta * c[ci + 2, cj + 5] + alpha * c2_5
        c[ci + 3, cj + 5] = beta * c[ci + 3, cj + 5] + alpha * c3_5
        c[ci + 4, cj + 5] = beta * c[ci + 4, cj + 5] + alpha * c4_5
        c[ci + 5, cj + 5] = beta * c[ci + 5, cj + 5] + alpha * c5_5
        c[ci + 6, cj + 5] = beta * c[ci + 6, cj + 5] + alpha * c6_5
        c[ci + 7, cj + 5] = beta * c[ci + 7, cj + 5] + alpha * c7_5


@njit(nogil=True, cache=True)
def macro_8x6(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_8x6(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_8x6(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_4x10(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c0_4 = 0.0
    c0_5 = 0.0
    c0_6 = 0.0
    c0_7 = 0.0
    c0_8 = 0.0
    c0_9 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c1_4 = 0.0
    c1_5 = 0.0
    c1_6 = 0.0
    c1_7 = 0.0
    c1_8 = 0.0
    c1_9 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c2_4 = 0.0
    c2_5 = 0.0
    c2_6 = 0.0
    c2_7 = 0.0
    c2_8 = 0.0
    c2_9 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c3_4 = 0.0
    c3_5 = 0.0
    c3_6 = 0.0
    c3_7 = 0.0
    c3_8 = 0.0
    c3_9 = 0.0
    for p in range(kc):
        pa = ao + p * 4
        pb = bo + p * 10
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        b4 = b[pb + 4]
        b5 = b[pb + 5]
        b6 = b[pb + 6]
        b7 = b[pb + 7]
        b8 = b[pb + 8]
        b9 = b[pb + 9]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c0_4 += a0 * b4
        c0_5 += a0 * b5
        c0_6 += a0 * b6
        c0_7 += a0 * b7
        c0_8 += a0 * b8
        c0_9 += a0 * b9
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c1_4 += a1 * b4
        c1_5 += a1 * b5
        c1_6 += a1 * b6
        c1_7 += a1 * b7
        c1_8 += a1 * b8
        c1_9 += a1 * b9
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c2_4 += a2 * b4
        c2_5 += a2 * b5
        c2_6 += a2 * b6
        c2_7 += a2 * b7
        c2_8 += a2 * b8
        c2_9 += a2 * b9
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c3_4 += a3 * b4
        c3_5 += a3 * b5
        c3_6 += a3 * b6
        c3_7 += a3 * b7
        c3_8 += a3 * b8
        c3_9 += a3 * b9
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 0, cj + 4] = alpha * c0_4
        c[ci + 1, cj + 4] = alpha * c1_4
        c[ci + 2, cj + 4] = alpha * c2_4
        c[ci + 3, cj + 4] = alpha * c3_4
        c[ci + 0, cj + 5] = alpha * c0_5
        c[ci + 1, cj + 5] = alpha * c1_5
        c[ci + 2, cj + 5] = alpha * c2_5
        c[ci + 3, cj + 5] = alpha * c3_5
        c[ci + 0, cj + 6] = alpha * c0_6
        c[ci + 1, cj + 6] = alpha * c1_6
        c[ci + 2, cj + 6] = alpha * c2_6
        c[ci + 3, cj + 6] = alpha * c3_6
        c[ci + 0, cj + 7] = alpha * c0_7
        c[ci + 1, cj + 7] = alpha * c1_7
        c[ci + 2, cj + 7] = alpha * c2_7
        c[ci + 3, cj + 7] = alpha * c3_7
        c[ci + 0, cj + 8] = alpha * c0_8
        c[ci + 1, cj + 8] = alpha * c1_8
        c[ci + 2, cj + 8] = alpha * c2_8
        c[ci + 3, cj + 8] = alpha * c3_8
        c[ci + 0, cj + 9] = alpha * c0_9
        c[ci + 1, cj + 9] = alpha * c1_9
        c[ci + 2, cj + 9] = alpha * c2_9
        c[ci + 3, cj + 9] = alpha * c3_9
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 0, cj + 4] = beta * c[ci + 0, cj + 4] + alpha * c0_4
        c[ci + 1, cj + 4] = beta * c[ci + 1, cj + 4] + alpha * c1_4
        c[ci + 2, cj + 4] = beta * c[ci + 2, cj + 4] + alpha * c2_4
        c[ci + 3, cj + 4] = beta * c[ci + 3, cj + 4] + alpha * c3_4
        c[ci + 0, cj + 5] = beta * c[ci + 0, cj + 5] + alpha * c0_5
        c[ci + 1, cj + 5] = beta * c[ci + 1, cj + 5] + alpha * c1_5
        c[ci + 2, cj + 5] = beta * c[ci + 2, cj + 5] + alpha * c2_5
        c[ci + 3, cj + 5] = beta * c[ci + 3, cj + 5] + alpha * c3_5
        c[ci + 0, cj + 6] = beta * c[ci + 0, cj + 6] + alpha * c0_6
        c[ci + 1, cj + 6] = beta * c[ci + 1, cj + 6] + alpha * c1_6
        c[ci + 2, cj + 6] = beta * c[ci + 2, cj + 6] + alpha * c2_6
        c[ci + 3, cj + 6] = beta * c[ci + 3, cj + 6] + alpha * c3_6
        c[ci + 0, cj + 7] = beta * c[ci + 0, cj + 7] + alpha * c0_7
        c[ci + 1, cj + 7] = beta * c[ci + 1, cj + 7] + alpha * c1_7
        c[ci + 2, cj + 7] = beta * c[ci + 2, cj + 7] + alpha * c2_7
        c[ci + 3, cj + 7] = beta * c[ci + 3, cj + 7] + alpha * c3_7
        c[ci + 0, cj + 8] = beta * c[ci + 0, cj + 8] + alpha * c0_8
        c[ci + 1, cj + 8] = beta * c[ci + 1, cj + 8] + alpha * c1_8
        c[ci + 2, cj + 8] = beta * c[ci + 2, cj + 8] + alpha * c2_8
        c[ci + 3, cj + 8] = beta * c[ci + 3, cj + 8] + alpha * c3_8
        c[ci + 0, cj + 9] = beta * c[ci + 0, cj + 9] + alpha * c0_9
        c[ci + 1, cj + 9] = beta * c[ci + 1, cj + 9] + alpha * c1_9
        c[ci + 2, cj + 9] = beta * c[ci + 2, cj + 9] + alpha * c2_9
        c[ci + 3, cj + 9] = beta * c[ci + 3, cj + 9] + alpha * c3_9


@njit(nogil=True, cache=True)
def macro_4x10(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_4x10(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_4x10(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_4x12(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c0_4 = 0.0
    c0_5 = 0.0
    c0_6 = 0.0
    c0_7 = 0.0
    c0_8 = 0.0
    c0_9 = 0.0
    c0_10 = 0.0
    c0_11 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c1_4 = 0.0
    c1_5 = 0.0
    c1_6 = 0.0
    c1_7 = 0.0
    c1_8 = 0.0
    c1_9 = 0.0
    c1_10 = 0.0
    c1_11 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c2_4 = 0.0
    c2_5 = 0.0
    c2_6 = 0.0
    c2_7 = 0.0
    c2_8 = 0.0
    c2_9 = 0.0
    c2_10 = 0.0
    c2_11 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c3_4 = 0.0
    c3_5 = 0.0
    c3_6 = 0.0
    c3_7 = 0.0
    c3_8 = 0.0
    c3_9 = 0.0
    c3_10 = 0.0
    c3_11 = 0.0
    for p in range(kc):
        pa = ao + p * 4
        pb = bo + p * 12
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        b4 = b[pb + 4]
        b5 = b[pb + 5]
        b6 = b[pb + 6]
        b7 = b[pb + 7]
        b8 = b[pb + 8]
        b9 = b[pb + 9]
        b10 = b[pb + 10]
        b11 = b[pb + 11]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c0_4 += a0 * b4
        c0_5 += a0 * b5
        c0_6 += a0 * b6
        c0_7 += a0 * b7
        c0_8 += a0 * b8
        c0_9 += a0 * b9
        c0_10 += a0 * b10
        c0_11 += a0 * b11
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c1_4 += a1 * b4
        c1_5 += a1 * b5
        c1_6 += a1 * b6
        c1_7 += a1 * b7
        c1_8 += a1 * b8
        c1_9 += a1 * b9
        c1_10 += a1 * b10
        c1_11 += a1 * b11
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c2_4 += a2 * b4
        c2_5 += a2 * b5
        c2_6 += a2 * b6
        c2_7 += a2 * b7
        c2_8 += a2 * b8
        c2_9 += a2 * b9
        c2_10 += a2 * b10
        c2_11 += a2 * b11
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c3_4 += a3 * b4
        c3_5 += a3 * b5
        c3_6 += a3 * b6
        c3_7 += a3 * b7
        c3_8 += a3 * b8
        c3_9 += a3 * b9
        c3_10 += a3 * b10
        c3_11 += a3 * b11
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 0, cj + 4] = alpha * c0_4
        c[ci + 1, cj + 4] = alpha * c1_4
        c[ci + 2, cj + 4] = alpha * c2_4
        c[ci + 3, cj + 4] = alpha * c3_4
        c[ci + 0, cj + 5] = alpha * c0_5
        c[ci + 1, cj + 5] = alpha * c1_5
        c[ci + 2, cj + 5] = alpha * c2_5
        c[ci + 3, cj + 5] = alpha * c3_5
        c[ci + 0, cj + 6] = alpha * c0_6
        c[ci + 1, cj + 6] = alpha * c1_6
        c[ci + 2, cj + 6] = alpha * c2_6
        c[ci + 3, cj + 6] = alpha * c3_6
        c[ci + 0, cj + 7] = alpha * c0_7
        c[ci + 1, cj + 7] = alpha * c1_7
        c[ci + 2, cj + 7] = alpha * c2_7
        c[ci + 3, cj + 7] = alpha * c3_7
        c[ci + 0, cj + 8] = alpha * c0_8
        c[ci + 1, cj + 8] = alpha * c1_8
        c[ci + 2, cj + 8] = alpha * c2_8
        c[ci + 3, cj + 8] = alpha * c3_8
        c[ci + 0, cj + 9] = alpha * c0_9
        c[ci + 1, cj + 9] = alpha * c1_9
        c[ci + 2, cj + 9] = alpha * c2_9
        c[ci + 3, cj + 9] = alpha * c3_9
        c[ci + 0, cj + 10] = alpha * c0_10
        c[ci + 1, cj + 10] = alpha * c1_10
        c[ci + 2, cj + 10] = alpha * c2_10
        c[ci + 3, cj + 10] = alpha * c3_10
        c[ci + 0, cj + 11] = alpha * c0_11
        c[ci + 1, cj + 11] = alpha * c1_11
        c[ci + 2, cj + 11] = alpha * c2_11
        c[ci + 3, cj + 11] = alpha * c3_11
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 0, cj + 4] = beta * c[ci + 0, cj + 4] + alpha * c0_4
        c[ci + 1, cj + 4] = beta * c[ci + 1, cj + 4] + alpha * c1_4
        c[ci + 2, cj + 4] = beta * c[ci + 2, cj + 4] + alpha * c2_4
        c[ci + 3, cj + 4] = beta * c[ci + 3, cj + 4] + alpha * c3_4
        c[ci + 0, cj + 5] = beta * c[ci + 0, cj + 5] + alpha * c0_5
        c[ci + 1, cj + 5] = beta * c[ci + 1, cj + 5] + alpha * c1_5
        c[ci + 2, cj + 5] = beta * c[ci + 2, cj + 5] + alpha * c2_5
        c[ci + 3, cj + 5] = beta * c[ci + 3, cj + 5] + alpha * c3_5
        c[ci + 0, cj + 6] = beta * c[ci + 0, cj + 6] + alpha * c0_6
        c[ci + 1, cj + 6] = beta * c[ci + 1, cj + 6] + alpha * c1_6
        c[ci + 2, cj + 6] = beta * c[ci + 2, cj + 6] + alpha * c2_6
        c[ci + 3, cj + 6] = beta * c[ci + 3, cj + 6] + alpha * c3_6
        c[ci + 0, cj + 7] = beta * c[ci + 0, cj + 7] + alpha * c0_7
        c[ci + 1, cj + 7] = beta * c[ci + 1, cj + 7] + alpha * c1_7
        c[ci + 2, cj + 7] = beta * c[ci + 2, cj + 7] + alpha * c2_7
        c[ci + 3, cj + 7] = beta * c[ci + 3, cj + 7] + alpha * c3_7
        c[ci + 0, cj + 8] = beta * c[ci + 0, cj + 8] + alpha * c0_8
        c[ci + 1, cj + 8] = beta * c[ci + 1, cj + 8] + alpha * c1_8
        c[ci + 2, cj + 8] = beta * c[ci + 2, cj + 8] + alpha * c2_8
        c[ci + 3, cj + 8] = beta * c[ci + 3, cj + 8] + alpha * c3_8
        c[ci + 0, cj + 9] = beta * c[ci + 0, cj + 9] + alpha * c0_9
        c[ci + 1, cj + 9] = beta * c[ci + 1, cj + 9] + alpha * c1_9
        c[ci + 2, cj + 9] = beta * c[ci + 2, cj + 9] + alpha * c2_9
        c[ci + 3, cj + 9] = beta * c[ci + 3, cj + 9] + alpha * c3_9
        c[ci + 0, cj + 10] = beta * c[ci + 0, cj + 10] + alpha * c0_10
        c[ci + 1, cj + 10] = beta * c[ci + 1, cj + 10] + alpha * c1_10
        c[ci + 2, cj + 10] = beta * c[ci + 2, cj + 10] + alpha * c2_10
        c[ci + 3, cj + 10] = beta * c[ci + 3, cj + 10] + alpha * c3_10
        c[ci + 0, cj + 11] = beta * c[ci + 0, cj + 11] + alpha * c0_11
        c[ci + 1, cj + 11] = beta * c[ci + 1, cj + 11] + alpha * c1_11
        c[ci + 2, cj + 11] = beta * c[ci + 2, cj + 11] + alpha * c2_11
        c[ci + 3, cj + 11] = beta * c[ci + 3, cj + 11] + alpha * c3_11


@njit(nogil=True, cache=True)
def macro_4x12(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_4x12(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_4x12(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_10x4(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c4_0 = 0.0
    c4_1 = 0.0
    c4_2 = 0.0
    c4_3 = 0.0
    c5_0 = 0.0
    c5_1 = 0.0
    c5_2 = 0.0
    c5_3 = 0.0
    c6_0 = 0.0
    c6_1 = 0.0
    c6_2 = 0.0
    c6_3 = 0.0
    c7_0 = 0.0
    c7_1 = 0.0
    c7_2 = 0.0
    c7_3 = 0.0
    c8_0 = 0.0
    c8_1 = 0.0
    c8_2 = 0.0
    c8_3 = 0.0
    c9_0 = 0.0
    c9_1 = 0.0
    c9_2 = 0.0
    c9_3 = 0.0
    for p in range(kc):
        pa = ao + p * 10
        pb = bo + p * 4
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        a4 = a[pa + 4]
        a5 = a[pa + 5]
        a6 = a[pa + 6]
        a7 = a[pa + 7]
        a8 = a[pa + 8]
        a9 = a[pa + 9]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c4_0 += a4 * b0
        c4_1 += a4 * b1
        c4_2 += a4 * b2
        c4_3 += a4 * b3
        c5_0 += a5 * b0
        c5_1 += a5 * b1
        c5_2 += a5 * b2
        c5_3 += a5 * b3
        c6_0 += a6 * b0
        c6_1 += a6 * b1
        c6_2 += a6 * b2
        c6_3 += a6 * b3
        c7_0 += a7 * b0
        c7_1 += a7 * b1
        c7_2 += a7 * b2
        c7_3 += a7 * b3
        c8_0 += a8 * b0
        c8_1 += a8 * b1
        c8_2 += a8 * b2
        c8_3 += a8 * b3
        c9_0 += a9 * b0
        c9_1 += a9 * b1
        c9_2 += a9 * b2
        c9_3 += a9 * b3
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 4, cj + 0] = alpha * c4_0
        c[ci + 5, cj + 0] = alpha * c5_0
        c[ci + 6, cj + 0] = alpha * c6_0
        c[ci + 7, cj + 0] = alpha * c7_0
        c[ci + 8, cj + 0] = alpha * c8_0
        c[ci + 9, cj + 0] = alpha * c9_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 4, cj + 1] = alpha * c4_1
        c[ci + 5, cj + 1] = alpha * c5_1
        c[ci + 6, cj + 1] = alpha * c6_1
        c[ci + 7, cj + 1] = alpha * c7_1
        c[ci + 8, cj + 1] = alpha * c8_1
        c[ci + 9, cj + 1] = alpha * c9_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 4, cj + 2] = alpha * c4_2
        c[ci + 5, cj + 2] = alpha * c5_2
        c[ci + 6, cj + 2] = alpha * c6_2
        c[ci + 7, cj + 2] = alpha * c7_2
        c[ci + 8, cj + 2] = alpha * c8_2
        c[ci + 9, cj + 2] = alpha * c9_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 4, cj + 3] = alpha * c4_3
        c[ci + 5, cj + 3] = alpha * c5_3
        c[ci + 6, cj + 3] = alpha * c6_3
        c[ci + 7, cj + 3] = alpha * c7_3
        c[ci + 8, cj + 3] = alpha * c8_3
        c[ci + 9, cj + 3] = alpha * c9_3
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 4, cj + 0] = beta * c[ci + 4, cj + 0] + alpha * c4_0
        c[ci + 5, cj + 0] = beta * c[ci + 5, cj + 0] + alpha * c5_0
        c[ci + 6, cj + 0] = beta * c[ci + 6, cj + 0] + alpha * c6_0
        c[ci + 7, cj + 0] = beta * c[ci + 7, cj + 0] + alpha * c7_0
        c[ci + 8, cj + 0] = beta * c[ci + 8, cj + 0] + alpha * c8_0
        c[ci + 9, cj + 0] = beta * c[ci + 9, cj + 0] + alpha * c9_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 4, cj + 1] = beta * c[ci + 4, cj + 1] + alpha * c4_1
        c[ci + 5, cj + 1] = beta * c[ci + 5, cj + 1] + alpha * c5_1
        c[ci + 6, cj + 1] = beta * c[ci + 6, cj + 1] + alpha * c6_1
        c[ci + 7, cj + 1] = beta * c[ci + 7, cj + 1] + alpha * c7_1
        c[ci + 8, cj + 1] = beta * c[ci + 8, cj + 1] + alpha * c8_1
        c[ci + 9, cj + 1] = beta * c[ci + 9, cj + 1] + alpha * c9_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 4, cj + 2] = beta * c[ci + 4, cj + 2] + alpha * c4_2
        c[ci + 5, cj + 2] = beta * c[ci + 5, cj + 2] + alpha * c5_2
        c[ci + 6, cj + 2] = beta * c[ci + 6, cj + 2] + alpha * c6_2
        c[ci + 7, cj + 2] = beta * c[ci + 7, cj + 2] + alpha * c7_2
        c[ci + 8, cj + 2] = beta * c[ci + 8, cj + 2] + alpha * c8_2
        c[ci + 9, cj + 2] = beta * c[ci + 9, cj + 2] + alpha * c9_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 4, cj + 3] = beta * c[ci + 4, cj + 3] + alpha * c4_3
        c[ci + 5, cj + 3] = beta * c[ci + 5, cj + 3] + alpha * c5_3
        c[ci + 6, cj + 3] = beta * c[ci + 6, cj + 3] + alpha * c6_3
        c[ci + 7, cj + 3] = beta * c[ci + 7, cj + 3] + alpha * c7_3
        c[ci + 8, cj + 3] = beta * c[ci + 8, cj + 3] + alpha * c8_3
        c[ci + 9, cj + 3] = beta * c[ci + 9, cj + 3] + alpha * c9_3


@njit(nogil=True, cache=True)
def macro_10x4(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_10x4(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_10x4(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


@njit(nogil=True, cache=True)
def kernel_12x4(mr, nr, kc, alpha, a, ao, b, bo, beta, c, ci, cj):
    c0_0 = 0.0
    c0_1 = 0.0
    c0_2 = 0.0
    c0_3 = 0.0
    c1_0 = 0.0
    c1_1 = 0.0
    c1_2 = 0.0
    c1_3 = 0.0
    c2_0 = 0.0
    c2_1 = 0.0
    c2_2 = 0.0
    c2_3 = 0.0
    c3_0 = 0.0
    c3_1 = 0.0
    c3_2 = 0.0
    c3_3 = 0.0
    c4_0 = 0.0
    c4_1 = 0.0
    c4_2 = 0.0
    c4_3 = 0.0
    c5_0 = 0.0
    c5_1 = 0.0
    c5_2 = 0.0
    c5_3 = 0.0
    c6_0 = 0.0
    c6_1 = 0.0
    c6_2 = 0.0
    c6_3 = 0.0
    c7_0 = 0.0
    c7_1 = 0.0
    c7_2 = 0.0
    c7_3 = 0.0
    c8_0 = 0.0
    c8_1 = 0.0
    c8_2 = 0.0
    c8_3 = 0.0
    c9_0 = 0.0
    c9_1 = 0.0
    c9_2 = 0.0
    c9_3 = 0.0
    c10_0 = 0.0
    c10_1 = 0.0
    c10_2 = 0.0
    c10_3 = 0.0
    c11_0 = 0.0
    c11_1 = 0.0
    c11_2 = 0.0
    c11_3 = 0.0
    for p in range(kc):
        pa = ao + p * 12
        pb = bo + p * 4
        a0 = a[pa + 0]
        a1 = a[pa + 1]
        a2 = a[pa + 2]
        a3 = a[pa + 3]
        a4 = a[pa + 4]
        a5 = a[pa + 5]
        a6 = a[pa + 6]
        a7 = a[pa + 7]
        a8 = a[pa + 8]
        a9 = a[pa + 9]
        a10 = a[pa + 10]
        a11 = a[pa + 11]
        b0 = b[pb + 0]
        b1 = b[pb + 1]
        b2 = b[pb + 2]
        b3 = b[pb + 3]
        c0_0 += a0 * b0
        c0_1 += a0 * b1
        c0_2 += a0 * b2
        c0_3 += a0 * b3
        c1_0 += a1 * b0
        c1_1 += a1 * b1
        c1_2 += a1 * b2
        c1_3 += a1 * b3
        c2_0 += a2 * b0
        c2_1 += a2 * b1
        c2_2 += a2 * b2
        c2_3 += a2 * b3
        c3_0 += a3 * b0
        c3_1 += a3 * b1
        c3_2 += a3 * b2
        c3_3 += a3 * b3
        c4_0 += a4 * b0
        c4_1 += a4 * b1
        c4_2 += a4 * b2
        c4_3 += a4 * b3
        c5_0 += a5 * b0
        c5_1 += a5 * b1
        c5_2 += a5 * b2
        c5_3 += a5 * b3
        c6_0 += a6 * b0
        c6_1 += a6 * b1
        c6_2 += a6 * b2
        c6_3 += a6 * b3
        c7_0 += a7 * b0
        c7_1 += a7 * b1
        c7_2 += a7 * b2
        c7_3 += a7 * b3
        c8_0 += a8 * b0
        c8_1 += a8 * b1
        c8_2 += a8 * b2
        c8_3 += a8 * b3
        c9_0 += a9 * b0
        c9_1 += a9 * b1
        c9_2 += a9 * b2
        c9_3 += a9 * b3
        c10_0 += a10 * b0
        c10_1 += a10 * b1
        c10_2 += a10 * b2
        c10_3 += a10 * b3
        c11_0 += a11 * b0
        c11_1 += a11 * b1
        c11_2 += a11 * b2
        c11_3 += a11 * b3
    if beta == 0.0:
        c[ci + 0, cj + 0] = alpha * c0_0
        c[ci + 1, cj + 0] = alpha * c1_0
        c[ci + 2, cj + 0] = alpha * c2_0
        c[ci + 3, cj + 0] = alpha * c3_0
        c[ci + 4, cj + 0] = alpha * c4_0
        c[ci + 5, cj + 0] = alpha * c5_0
        c[ci + 6, cj + 0] = alpha * c6_0
        c[ci + 7, cj + 0] = alpha * c7_0
        c[ci + 8, cj + 0] = alpha * c8_0
        c[ci + 9, cj + 0] = alpha * c9_0
        c[ci + 10, cj + 0] = alpha * c10_0
        c[ci + 11, cj + 0] = alpha * c11_0
        c[ci + 0, cj + 1] = alpha * c0_1
        c[ci + 1, cj + 1] = alpha * c1_1
        c[ci + 2, cj + 1] = alpha * c2_1
        c[ci + 3, cj + 1] = alpha * c3_1
        c[ci + 4, cj + 1] = alpha * c4_1
        c[ci + 5, cj + 1] = alpha * c5_1
        c[ci + 6, cj + 1] = alpha * c6_1
        c[ci + 7, cj + 1] = alpha * c7_1
        c[ci + 8, cj + 1] = alpha * c8_1
        c[ci + 9, cj + 1] = alpha * c9_1
        c[ci + 10, cj + 1] = alpha * c10_1
        c[ci + 11, cj + 1] = alpha * c11_1
        c[ci + 0, cj + 2] = alpha * c0_2
        c[ci + 1, cj + 2] = alpha * c1_2
        c[ci + 2, cj + 2] = alpha * c2_2
        c[ci + 3, cj + 2] = alpha * c3_2
        c[ci + 4, cj + 2] = alpha * c4_2
        c[ci + 5, cj + 2] = alpha * c5_2
        c[ci + 6, cj + 2] = alpha * c6_2
        c[ci + 7, cj + 2] = alpha * c7_2
        c[ci + 8, cj + 2] = alpha * c8_2
        c[ci + 9, cj + 2] = alpha * c9_2
        c[ci + 10, cj + 2] = alpha * c10_2
        c[ci + 11, cj + 2] = alpha * c11_2
        c[ci + 0, cj + 3] = alpha * c0_3
        c[ci + 1, cj + 3] = alpha * c1_3
        c[ci + 2, cj + 3] = alpha * c2_3
        c[ci + 3, cj + 3] = alpha * c3_3
        c[ci + 4, cj + 3] = alpha * c4_3
        c[ci + 5, cj + 3] = alpha * c5_3
        c[ci + 6, cj + 3] = alpha * c6_3
        c[ci + 7, cj + 3] = alpha * c7_3
        c[ci + 8, cj + 3] = alpha * c8_3
        c[ci + 9, cj + 3] = alpha * c9_3
        c[ci + 10, cj + 3] = alpha * c10_3
        c[ci + 11, cj + 3] = alpha * c11_3
    else:
        c[ci + 0, cj + 0] = beta * c[ci + 0, cj + 0] + alpha * c0_0
        c[ci + 1, cj + 0] = beta * c[ci + 1, cj + 0] + alpha * c1_0
        c[ci + 2, cj + 0] = beta * c[ci + 2, cj + 0] + alpha * c2_0
        c[ci + 3, cj + 0] = beta * c[ci + 3, cj + 0] + alpha * c3_0
        c[ci + 4, cj + 0] = beta * c[ci + 4, cj + 0] + alpha * c4_0
        c[ci + 5, cj + 0] = beta * c[ci + 5, cj + 0] + alpha * c5_0
        c[ci + 6, cj + 0] = beta * c[ci + 6, cj + 0] + alpha * c6_0
        c[ci + 7, cj + 0] = beta * c[ci + 7, cj + 0] + alpha * c7_0
        c[ci + 8, cj + 0] = beta * c[ci + 8, cj + 0] + alpha * c8_0
        c[ci + 9, cj + 0] = beta * c[ci + 9, cj + 0] + alpha * c9_0
        c[ci + 10, cj + 0] = beta * c[ci + 10, cj + 0] + alpha * c10_0
        c[ci + 11, cj + 0] = beta * c[ci + 11, cj + 0] + alpha * c11_0
        c[ci + 0, cj + 1] = beta * c[ci + 0, cj + 1] + alpha * c0_1
        c[ci + 1, cj + 1] = beta * c[ci + 1, cj + 1] + alpha * c1_1
        c[ci + 2, cj + 1] = beta * c[ci + 2, cj + 1] + alpha * c2_1
        c[ci + 3, cj + 1] = beta * c[ci + 3, cj + 1] + alpha * c3_1
        c[ci + 4, cj + 1] = beta * c[ci + 4, cj + 1] + alpha * c4_1
        c[ci + 5, cj + 1] = beta * c[ci + 5, cj + 1] + alpha * c5_1
        c[ci + 6, cj + 1] = beta * c[ci + 6, cj + 1] + alpha * c6_1
        c[ci + 7, cj + 1] = beta * c[ci + 7, cj + 1] + alpha * c7_1
        c[ci + 8, cj + 1] = beta * c[ci + 8, cj + 1] + alpha * c8_1
        c[ci + 9, cj + 1] = beta * c[ci + 9, cj + 1] + alpha * c9_1
        c[ci + 10, cj + 1] = beta * c[ci + 10, cj + 1] + alpha * c10_1
        c[ci + 11, cj + 1] = beta * c[ci + 11, cj + 1] + alpha * c11_1
        c[ci + 0, cj + 2] = beta * c[ci + 0, cj + 2] + alpha * c0_2
        c[ci + 1, cj + 2] = beta * c[ci + 1, cj + 2] + alpha * c1_2
        c[ci + 2, cj + 2] = beta * c[ci + 2, cj + 2] + alpha * c2_2
        c[ci + 3, cj + 2] = beta * c[ci + 3, cj + 2] + alpha * c3_2
        c[ci + 4, cj + 2] = beta * c[ci + 4, cj + 2] + alpha * c4_2
        c[ci + 5, cj + 2] = beta * c[ci + 5, cj + 2] + alpha * c5_2
        c[ci + 6, cj + 2] = beta * c[ci + 6, cj + 2] + alpha * c6_2
        c[ci + 7, cj + 2] = beta * c[ci + 7, cj + 2] + alpha * c7_2
        c[ci + 8, cj + 2] = beta * c[ci + 8, cj + 2] + alpha * c8_2
        c[ci + 9, cj + 2] = beta * c[ci + 9, cj + 2] + alpha * c9_2
        c[ci + 10, cj + 2] = beta * c[ci + 10, cj + 2] + alpha * c10_2
        c[ci + 11, cj + 2] = beta * c[ci + 11, cj + 2] + alpha * c11_2
        c[ci + 0, cj + 3] = beta * c[ci + 0, cj + 3] + alpha * c0_3
        c[ci + 1, cj + 3] = beta * c[ci + 1, cj + 3] + alpha * c1_3
        c[ci + 2, cj + 3] = beta * c[ci + 2, cj + 3] + alpha * c2_3
        c[ci + 3, cj + 3] = beta * c[ci + 3, cj + 3] + alpha * c3_3
        c[ci + 4, cj + 3] = beta * c[ci + 4, cj + 3] + alpha * c4_3
        c[ci + 5, cj + 3] = beta * c[ci + 5, cj + 3] + alpha * c5_3
        c[ci + 6, cj + 3] = beta * c[ci + 6, cj + 3] + alpha * c6_3
        c[ci + 7, cj + 3] = beta * c[ci + 7, cj + 3] + alpha * c7_3
        c[ci + 8, cj + 3] = beta * c[ci + 8, cj + 3] + alpha * c8_3
        c[ci + 9, cj + 3] = beta * c[ci + 9, cj + 3] + alpha * c9_3
        c[ci + 10, cj + 3] = beta * c[ci + 10, cj + 3] + alpha * c10_3
        c[ci + 11, cj + 3] = beta * c[ci + 11, cj + 3] + alpha * c11_3


@njit(nogil=True, cache=True)
def macro_12x4(mr, nr, kc, alpha, ac, bc, beta, c, mc, nc, jp_lo, jp_hi):
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
                kernel_12x4(mr, nr, kc, alpha, ac, ao, bc, bo, beta, c, ir, jr)
            else:
                tmp[:, :] = 0.0
                for j in range(nlive):
                    for i in range(mlive):
                        tmp[i, j] = c[ir + i, jr + j]
                kernel_12x4(mr, nr, kc, alpha, ac, ao, bc, bo, beta, tmp, 0, 0)
                for j in range(nlive):
                    for i in range(mlive):
                        c[ir + i, jr + j] = tmp[i, j]


SPECIALIZED = {
    (6, 8): (kernel_6x8, macro_6x8),
    (8, 6): (kernel_8x6, macro_8x6),
    (4, 10): (kernel_4x10, macro_4x10),
    (4, 12): (kernel_4x12, macro_4x12),
    (10, 4): (kernel_10x4, macro_10x4),
    (12, 4): (kernel_12x4, macro_12x4),
}
