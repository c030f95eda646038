# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels. Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef long long _inv_mod(long long a, long long p) nogil:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank(long long* m, int rows, int cols, long long p) nogil:
    cdef int r = 0, c, piv, i, k
    cdef long long inv, f, tmp
    cdef long long* prow
    cdef long long* row
    for c in range(cols):
        if r == rows:
            break
        piv = r
        while piv < rows and m[piv * cols + c] == 0:
            piv += 1
        if piv == rows:
            continue
        if piv != r:
            for k in range(c, cols):
                tmp = m[r * cols + k]
                m[r * cols + k] = m[piv * cols + k]
                m[piv * cols + k] = tmp
        prow = m + r * cols
        inv = _inv_mod(prow[c], p)
        for i in range(r + 1, rows):
            row = m + i * cols
            if row[c] != 0:
                f = row[c] * inv % p
                for k in range(c, cols):
                    tmp = (row[k] - f * prow[k]) % p
                    if tmp < 0:
                        tmp += p
                    row[k] = tmp
        r += 1
    return r


cdef long long* _load(object flat, int n, long long p) except NULL:
    cdef long long* buf = <long long*> malloc(max(n, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = flat[i] % p
    return buf


def rank_mod_p(flat, int rows, int cols, long long p):
    if rows == 0 or cols == 0:
        return 0
    cdef long long* m = _load(flat, rows * cols, p)
    cdef int r
    try:
        r = _rank(m, rows, cols, p)
    finally:
        free(m)
    return r


def min_rank_assignments(flat, int rows, int cols, unknowns, long long p, int floor=0):
    cdef int n = rows * cols
    cdef int u = len(unknowns)
    cdef long long* base = _load(flat, n, p)
    cdef long long* work = <long long*> malloc(max(n, 1) * sizeof(long long))
    cdef int* pos = <int*> malloc(max(u, 1) * sizeof(int))
    cdef long long* digits = <long long*> malloc(max(u, 1) * sizeof(long long))
    cdef long long* best_digits = <long long*> malloc(max(u, 1) * sizeof(long long))
    cdef int best = -1, rk, k, i
    cdef long long visited = 0
    if work == NULL or pos == NULL or digits == NULL or best_digits == NULL:
        free(base); free(work); free(pos); free(digits); free(best_digits)
        raise MemoryError()
    try:
        for i in range(u):
            pos[i] = unknowns[i]
            digits[i] = 0
            best_digits[i] = 0
        with nogil:
            while True:
                memcpy(work, base, n * sizeof(long long))
                for i in range(u):
                    work[pos[i]] = digits[i]
                if rows == 0 or cols == 0:
                    rk = 0
                else:
                    rk = _rank(work, rows, cols, p)
                visited += 1
                if best < 0 or rk < best:
                    best = rk
                    for i in range(u):
                        best_digits[i] = digits[i]
                    if rk <= floor:
                        break
                k = u - 1
                while k >= 0:
                    digits[k] += 1
                    if digits[k] < p:
                        break
                    digits[k] = 0
                    k -= 1
                if k < 0:
                    break
        assignment = tuple(best_digits[i] for i in range(u))
    finally:
        free(base); free(work); free(pos); free(digits); free(best_digits)
    return best, assignment, visited
