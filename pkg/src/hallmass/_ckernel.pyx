# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled series kernels.

Same contract as ``hallmass._pykernel``.  Inputs that fit in signed 64-bit
words run on C arrays with checked arithmetic; the first overflow (or any
oversized input) hands the whole call to the pure-Python kernel, so results
are always exact.
"""
from libc.limits cimport LLONG_MIN
from libc.stdlib cimport free, malloc

from hallmass import _pykernel

cdef extern from *:
    """
    static inline int hm_mul_add(long long acc, long long a, long long b,
                                 long long *out) {
        long long t;
        if (__builtin_mul_overflow(a, b, &t)) return 1;
        return __builtin_add_overflow(acc, t, out);
    }
    static inline int hm_add(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    """
    int hm_mul_add(long long acc, long long a, long long b, long long *out) nogil
    int hm_add(long long a, long long b, long long *out) nogil


cdef long long *_to_c(object seq, Py_ssize_t m) except? NULL:
    """Copy the first m entries (zero padded) into a malloc'd buffer.

    Returns NULL when a value does not fit in 64 bits.
    """
    cdef long long *buf = <long long *>malloc((m if m > 0 else 1) * sizeof(long long))
    cdef Py_ssize_t i, ln = len(seq)
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            buf[i] = seq[i] if i < ln else 0
    except OverflowError:
        free(buf)
        return NULL
    return buf


cdef list _from_c(long long *buf, Py_ssize_t m):
    cdef Py_ssize_t i
    return [buf[i] for i in range(m)]


def conv(a, b, Py_ssize_t n):
    cdef Py_ssize_t m = n + 1
    cdef Py_ssize_t la = min(<Py_ssize_t>len(a), m)
    cdef Py_ssize_t lb = min(<Py_ssize_t>len(b), m)
    cdef Py_ssize_t i, j, top
    cdef long long ai
    cdef long long *ca
    cdef long long *cb
    cdef long long *out
    cdef bint overflow = False
    if n < 0:
        return []
    ca = _to_c(a, la)
    if ca == NULL:
        return _pykernel.conv(a, b, n)
    cb = _to_c(b, lb)
    if cb == NULL:
        free(ca)
        return _pykernel.conv(a, b, n)
    out = <long long *>malloc(m * sizeof(long long))
    if out == NULL:
        free(ca)
        free(cb)
        raise MemoryError()
    for i in range(m):
        out[i] = 0
    with nogil:
        for i in range(la):
            ai = ca[i]
            if ai == 0:
                continue
            top = m - i
            if top > lb:
                top = lb
            for j in range(top):
                if cb[j] != 0 and hm_mul_add(out[i + j], ai, cb[j], &out[i + j]):
                    overflow = True
                    break
            if overflow:
                break
    try:
        if overflow:
            return _pykernel.conv(a, b, n)
        return _from_c(out, m)
    finally:
        free(ca)
        free(cb)
        free(out)


def inverse(a, Py_ssize_t n):
    cdef Py_ssize_t m = n + 1
    cdef Py_ssize_t la, k, j, top
    cdef long long c, s
    cdef long long *ca
    cdef long long *b
    cdef bint overflow = False
    if len(a) == 0 or a[0] == 0:
        raise ZeroDivisionError("non-unit series")
    if n < 0 or (a[0] != 1 and a[0] != -1):
        return _pykernel.inverse(a, n)
    la = min(<Py_ssize_t>len(a), m)
    ca = _to_c(a, la)
    if ca == NULL:
        return _pykernel.inverse(a, n)
    b = <long long *>malloc(m * sizeof(long long))
    if b == NULL:
        free(ca)
        raise MemoryError()
    c = ca[0]
    b[0] = c
    with nogil:
        for k in range(1, m):
            s = 0
            top = k if k < la - 1 else la - 1
            for j in range(1, top + 1):
                if ca[j] != 0 and hm_mul_add(s, ca[j], b[k - j], &s):
                    overflow = True
                    break
            if overflow:
                break
            # c is +-1, and -c*s can only overflow at s == LLONG_MIN
            if s == LLONG_MIN:
                overflow = True
                break
            b[k] = -c * s
    try:
        if overflow:
            return _pykernel.inverse(a, n)
        return _from_c(b, m), 1
    finally:
        free(ca)
        free(b)


def divide_binomial(a, Py_ssize_t j, Py_ssize_t n):
    cdef Py_ssize_t m = n + 1
    cdef Py_ssize_t k
    cdef long long *out
    cdef bint overflow = False
    if n < 0:
        return []
    out = _to_c(a, m)
    if out == NULL:
        return _pykernel.divide_binomial(a, j, n)
    with nogil:
        for k in range(j, m):
            if hm_add(out[k], out[k - j], &out[k]):
                overflow = True
                break
    try:
        if overflow:
            return _pykernel.divide_binomial(a, j, n)
        return _from_c(out, m)
    finally:
        free(out)
