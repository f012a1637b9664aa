# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled trigonometric-series kernels.

Coefficients are dense: ``ca[n]``, ``cb[n]`` multiply ``cos(n phi)`` and
``sin(n phi)``; index 0 is ignored (the constant term is ``c0``).
"""
import numpy as np

from libc.math cimport cos, sin, M_PI

# exact cos/sin are re-seeded every RESEED harmonics to bound recurrence drift
cdef enum:
    RESEED = 32


cdef inline double _series_at(double c0, const double[::1] ca, const double[::1] cb,
                              Py_ssize_t nmax, double phi) nogil:
    cdef double c1 = cos(phi), s1 = sin(phi)
    cdef double cn = c1, sn = s1, tmp
    cdef double acc = c0
    cdef Py_ssize_t n
    for n in range(1, nmax + 1):
        if n % RESEED == 0:
            cn = cos(n * phi)
            sn = sin(n * phi)
        acc += ca[n] * cn + cb[n] * sn
        tmp = cn * c1 - sn * s1
        sn = sn * c1 + cn * s1
        cn = tmp
    return acc


def eval_series(double c0, const double[::1] ca, const double[::1] cb, const double[::1] phis):
    cdef Py_ssize_t m = phis.shape[0], k
    cdef Py_ssize_t nmax = ca.shape[0] - 1
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    with nogil:
        for k in range(m):
            ov[k] = _series_at(c0, ca, cb, nmax, phis[k])
    return out


def eval_series_uniform(double c0, const double[::1] ca, const double[::1] cb, Py_ssize_t m):
    cdef Py_ssize_t k
    cdef Py_ssize_t nmax = ca.shape[0] - 1
    cdef double step = 2.0 * M_PI / m
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    with nogil:
        for k in range(m):
            ov[k] = _series_at(c0, ca, cb, nmax, k * step)
    return out


def min_series_uniform(double c0, const double[::1] ca, const double[::1] cb, Py_ssize_t m):
    cdef Py_ssize_t k, best_k = 0
    cdef Py_ssize_t nmax = ca.shape[0] - 1
    cdef double step = 2.0 * M_PI / m
    cdef double v, best = 0.0
    with nogil:
        for k in range(m):
            v = _series_at(c0, ca, cb, nmax, k * step)
            if k == 0 or v < best:
                best = v
                best_k = k
    return best, best_k
