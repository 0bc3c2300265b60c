# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels, drop-in compatible with _kernels_py.

Same signatures, same list-in/int-or-list-out contract. All loop indices
are kept nonnegative so C truncated division never sees a negative
operand.
"""

from libc.stdlib cimport free, malloc


cdef long* _as_longs(seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> malloc(n * sizeof(long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


def jacobi_counts(dlog, q, m, a1, a2, a3):
    """Group-ring exponent counts for a Jacobi sum; see _kernels_py."""
    cdef long cq = q, cm = m, ca1 = a1, ca2 = a2, ca3 = a3
    cdef long* dl = _as_longs(dlog, cq)
    cdef long* t1 = <long*> malloc(cq * sizeof(long))
    cdef long* t2 = <long*> malloc(cq * sizeof(long))
    cdef long* t3 = <long*> malloc(cq * sizeof(long))
    cdef long* counts = <long*> malloc(cm * sizeof(long))
    cdef long v, v1, v2, v3, d, base, s
    try:
        if t1 == NULL or t2 == NULL or t3 == NULL or counts == NULL:
            raise MemoryError()
        for v in range(cm):
            counts[v] = 0
        for v in range(1, cq):
            d = dl[v]
            t1[v] = ca1 * d % cm
            t2[v] = ca2 * d % cm
            t3[v] = ca3 * d % cm
        for v1 in range(1, cq):
            base = t1[v1]
            s = 2 * cq - 1 - v1  # -1 - v1 shifted into [q, 2q-2]
            for v2 in range(1, cq):
                v3 = (s - v2) % cq
                if v3:
                    counts[(base + t2[v2] + t3[v3]) % cm] += 1
        return [counts[v] for v in range(cm)]
    finally:
        free(dl)
        free(t1)
        free(t2)
        free(t3)
        free(counts)


def chi_cubic_sum(chi2, cubes, a, b, q):
    """Sum of the quadratic character over x^3 + a*x + b for x in F_q."""
    cdef long cq = q, ca = a % q, cb = b % q
    cdef long* tchi = _as_longs(chi2, cq)
    cdef long* tcub = NULL
    cdef long x, total = 0
    try:
        tcub = _as_longs(cubes, cq)
        for x in range(cq):
            total += tchi[(tcub[x] + ca * x + cb) % cq]
        return total
    finally:
        free(tchi)
        free(tcub)


def fermat_affine(powm, rootcnt, q):
    """Points on 1 + u^m + v^m + w^m = 0 in affine 3-space over F_q."""
    cdef long cq = q
    cdef long* tpow = _as_longs(powm, cq)
    cdef long* troot = NULL
    cdef long u, v, w, total = 0
    try:
        troot = _as_longs(rootcnt, cq)
        for u in range(cq):
            w = 2 * cq - 1 - tpow[u]  # -1 - u^m kept nonnegative
            for v in range(cq):
                total += troot[(w - tpow[v]) % cq]
        return total
    finally:
        free(tpow)
        free(troot)
