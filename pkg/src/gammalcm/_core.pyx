# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; a line-for-line port of ``_pycore.py``."""

from libc.math cimport log, exp, pow, fabs, ceil, INFINITY

import numpy as np
cimport numpy as cnp

from ._tables import BERNOULLI_EVEN, FACTORIALS

cnp.import_array()

cdef enum:
    NB = 25
    NF = 61

cdef double _B[NB]
cdef double _F[NF]

for _i in range(NB):
    _B[_i] = BERNOULLI_EVEN[_i]
for _i in range(NF):
    _F[_i] = FACTORIALS[_i]


cdef double _digamma_asym(double z) noexcept nogil:
    cdef double inv2 = 1.0 / (z * z)
    cdef double w = inv2
    cdef double lead = log(z)
    cdef double terms[NB]
    cdef int nterms = 0
    cdef double prev = INFINITY
    cdef double t, at, s
    cdef int j
    for j in range(NB):
        t = _B[j] / (2.0 * (j + 1)) * w
        at = fabs(t)
        if at >= prev:
            break
        terms[nterms] = t
        nterms += 1
        prev = at
        if at < 1e-18 * lead:
            break
        w = w * inv2
    s = 0.0
    for j in range(nterms - 1, -1, -1):
        s += terms[j]
    return lead - 0.5 / z - s


cdef double _polygamma_asym_abs(int n, double z) noexcept nogil:
    cdef double lead = _F[n - 1] * pow(z, -n)
    cdef double half = 0.5 * _F[n] * pow(z, -(n + 1))
    cdef double inv2 = 1.0 / (z * z)
    cdef double w = pow(z, -(n + 2))
    cdef double g = 0.5 * _F[n + 1]
    cdef double terms[NB]
    cdef int nterms = 0
    cdef double prev = INFINITY
    cdef double t, at, s
    cdef int j, m
    for j in range(1, NB + 1):
        t = _B[j - 1] * g * w
        at = fabs(t)
        if at >= prev:
            break
        terms[nterms] = t
        nterms += 1
        prev = at
        if at < 1e-18 * lead:
            break
        m = 2 * j + n
        g = g * ((m * (m + 1.0)) / ((2 * j + 1.0) * (2 * j + 2.0)))
        w = w * inv2
    s = 0.0
    for j in range(nterms - 1, -1, -1):
        s += terms[j]
    return lead + (half + s)


cdef double _polygamma(int n, double x) noexcept nogil:
    cdef double threshold = 10.0 + 0.5 * n
    cdef int nshift = 0
    cdef int i
    cdef double z, corr, sign
    if x < threshold:
        nshift = <int>ceil(threshold - x)
    z = x + nshift
    corr = 0.0
    for i in range(nshift - 1, -1, -1):
        corr += pow(x + i, -(n + 1.0))
    if n == 0:
        return _digamma_asym(z) - corr
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * (_polygamma_asym_abs(n, z) + _F[n] * corr)


def polygamma(int n, double x):
    """psi^(n)(x) for x > 0 and 0 <= n <= 30, no argument checking."""
    return _polygamma(n, x)


def polygamma_orders(double x, int nmax):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nmax + 1, dtype=np.float64)
    cdef double[::1] o = out
    cdef int n
    with nogil:
        for n in range(nmax + 1):
            o[n] = _polygamma(n, x)
    return out


def series_mul(const double[::1] p, const double[::1] q):
    cdef Py_ssize_t size = p.shape[0]
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] r = out
    cdef Py_ssize_t k, j
    cdef double acc
    with nogil:
        for k in range(size):
            acc = 0.0
            for j in range(k + 1):
                acc += p[j] * q[k - j]
            r[k] = acc
    return out


def series_div(const double[::1] p, const double[::1] q):
    cdef Py_ssize_t size = p.shape[0]
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] r = out
    cdef double q0 = q[0]
    cdef Py_ssize_t k, j
    cdef double acc
    with nogil:
        for k in range(size):
            acc = 0.0
            for j in range(k):
                acc += r[j] * q[k - j]
            r[k] = (p[k] - acc) / q0
    return out


def series_log(const double[::1] p):
    cdef Py_ssize_t size = p.shape[0]
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] r = out
    cdef double p0 = p[0]
    cdef Py_ssize_t k, j
    cdef double acc
    with nogil:
        r[0] = log(p0)
        for k in range(1, size):
            acc = 0.0
            for j in range(1, k):
                acc += <double>j * r[j] * p[k - j]
            r[k] = (p[k] - acc / <double>k) / p0
    return out


def series_exp(const double[::1] p):
    cdef Py_ssize_t size = p.shape[0]
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] r = out
    cdef Py_ssize_t k, j
    cdef double acc
    with nogil:
        r[0] = exp(p[0])
        for k in range(1, size):
            acc = 0.0
            for j in range(1, k + 1):
                acc += <double>j * p[j] * r[k - j]
            r[k] = acc / <double>k
    return out
