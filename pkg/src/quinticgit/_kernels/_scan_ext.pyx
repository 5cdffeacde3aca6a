# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan over normalized weight vectors (see _scan_py for semantics)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def scan_slab(int64_t a0, int64_t bound, exps, crit):
    cdef cnp.int64_t[:, ::1] E = np.ascontiguousarray(exps, dtype=np.int64)
    crit_arr = np.asarray(crit, dtype=bool)
    cdef Py_ssize_t n = E.shape[0]
    cdef Py_ssize_t k = crit_arr.shape[0]
    cdef Py_ssize_t nw = (n + 63) // 64
    # complement of each critical set, packed into 64-bit words
    outside_np = np.zeros((k, nw), dtype=np.uint64)
    cdef Py_ssize_t i, j, w
    for i in range(k):
        for j in range(n):
            if not crit_arr[i, j]:
                outside_np[i, j // 64] |= np.uint64(1) << np.uint64(j % 64)
    cdef cnp.uint64_t[:, ::1] outside = outside_np

    cdef int64_t a1, a2, a3, a1_lo, hi, lo, g, s
    cdef int64_t scanned = 0
    cdef bint contained, ok
    cdef uint64_t *mask = <uint64_t *> malloc(nw * sizeof(uint64_t))
    if mask == NULL:
        raise MemoryError()
    violations = []
    try:
        a1_lo = -(a0 // 3)
        a1 = a0
        while a1 >= a1_lo:
            hi = bound - a0 - a1
            if a1 < hi:
                hi = a1
            lo = -((a0 + a1) // 2)
            a2 = hi
            while a2 >= lo:
                a3 = -(a0 + a1 + a2)
                g = _gcd(_gcd(a0, a1), _gcd(a2, a3))
                if g == 1:
                    scanned += 1
                    for w in range(nw):
                        mask[w] = 0
                    for j in range(n):
                        s = a0 * E[j, 0] + a1 * E[j, 1] + a2 * E[j, 2] + a3 * E[j, 3]
                        if s >= 0:
                            mask[j >> 6] |= (<uint64_t> 1) << (j & 63)
                    contained = False
                    for i in range(k):
                        ok = True
                        for w in range(nw):
                            if mask[w] & outside[i, w]:
                                ok = False
                                break
                        if ok:
                            contained = True
                            break
                    if not contained:
                        violations.append((a0, a1, a2, a3))
                a2 -= 1
            a1 -= 1
    finally:
        free(mask)
    return scanned, violations
