# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Hook-content and Weyl products are evaluated by counting prime exponents of
the (small) factors in C arrays, so no big quotient is ever formed.
Interpolation works on Python integers with the same algorithm as the
fallback.
"""
from libc.stdlib cimport calloc, free
from math import factorial


cdef int _sieve(int limit, int* spf) noexcept:
    cdef int i, j
    for i in range(limit + 1):
        spf[i] = 0
    for i in range(2, limit + 1):
        if spf[i] == 0:
            j = i
            while j <= limit:
                if spf[j] == 0:
                    spf[j] = i
                j += i
    return 0


cdef inline void _add_factor(long long x, int sgn, int* spf, long* expo) noexcept:
    cdef int p
    while x > 1:
        p = spf[x]
        expo[p] += sgn
        x //= p


cdef object _expand(int limit, long* expo, object where):
    cdef int p
    result = 1
    for p in range(2, limit + 1):
        if expo[p] < 0:
            raise ArithmeticError(f"quotient is not integral for {where}")
        if expo[p] > 0:
            result *= (<object>p) ** expo[p]
    return result


def hook_content_dim(tuple rows, long n):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 1
    cdef int width = rows[0]
    cdef int limit = <int>(n + width + nrows + 2)
    cdef int* spf = <int*>calloc(limit + 1, sizeof(int))
    cdef long* expo = <long*>calloc(limit + 1, sizeof(long))
    cdef int* cols = <int*>calloc(width + 1, sizeof(int))
    cdef int r, c, length
    cdef long long f
    if spf == NULL or expo == NULL or cols == NULL:
        free(spf); free(expo); free(cols)
        raise MemoryError()
    try:
        _sieve(limit, spf)
        for r in range(nrows):
            length = rows[r]
            for c in range(length):
                cols[c] += 1
        for r in range(nrows):
            length = rows[r]
            for c in range(length):
                f = n + c - r
                if f <= 0:
                    return 0
                _add_factor(f, 1, spf, expo)
                _add_factor((length - c - 1) + (cols[c] - r - 1) + 1, -1, spf, expo)
        return _expand(limit, expo, (rows, n))
    finally:
        free(spf); free(expo); free(cols)


def weyl_dim(tuple rows, long n):
    cdef Py_ssize_t nrows = len(rows)
    cdef int top = rows[0] if nrows else 0
    cdef int limit = <int>(top + n + 2)
    cdef int* spf = <int*>calloc(limit + 1, sizeof(int))
    cdef long* expo = <long*>calloc(limit + 1, sizeof(long))
    cdef long* ell = <long*>calloc(n + 1, sizeof(long))
    cdef long i, j
    cdef long long f
    if spf == NULL or expo == NULL or ell == NULL:
        free(spf); free(expo); free(ell)
        raise MemoryError()
    try:
        _sieve(limit, spf)
        for i in range(nrows):
            ell[i] = rows[i]
        for i in range(n):
            for j in range(i + 1, n):
                f = ell[i] - ell[j] + j - i
                if f <= 0:
                    return 0
                _add_factor(f, 1, spf, expo)
                _add_factor(j - i, -1, spf, expo)
        return _expand(limit, expo, (rows, n))
    finally:
        free(spf); free(expo); free(ell)


def interp_consecutive(x0, list values):
    cdef Py_ssize_t m = len(values)
    cdef Py_ssize_t k, e, i
    den = factorial(m - 1)
    cdef list coeffs = [0] * m
    cdef list basis = [1]
    cdef list row = list(values)
    cdef object scale, root, fact_k = 1
    for k in range(m):
        if k:
            fact_k *= k
        scale = row[0] * (den // fact_k)
        for e in range(len(basis)):
            coeffs[e] += scale * basis[e]
        for i in range(m - k - 1):
            row[i] = row[i + 1] - row[i]
        root = x0 + k
        basis.insert(0, 0)
        for e in range(len(basis) - 1):
            basis[e] -= root * basis[e + 1]
    return coeffs, den
