# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors thetamin._slow exactly."""

from libc.math cimport exp, cos, sin, M_PI

import numpy as np


def theta1d_partial(double X, double Y, int n_terms):
    cdef double acc = 0.0
    cdef int n
    for n in range(1, n_terms + 1):
        acc += exp(-M_PI * n * n * X) * cos(2.0 * M_PI * n * Y)
    return 2.0 * acc


def theta1d_poisson_partial(double X, double Y, int n_terms):
    cdef double acc = 0.0
    cdef double d
    cdef int n
    for n in range(-n_terms, n_terms + 1):
        d = n - Y
        acc += exp(-M_PI * d * d / X)
    return acc


def theta1d_dy_partial(double X, double Y, int n_terms):
    cdef double acc = 0.0
    cdef int n
    for n in range(1, n_terms + 1):
        acc += n * exp(-M_PI * n * n * X) * sin(2.0 * M_PI * n * Y)
    return -4.0 * M_PI * acc


def lattice_sum(double alpha, double x, double y, int radius):
    cdef double acc = 0.0
    cdef double e, t
    cdef int n, m
    with nogil:
        for n in range(-radius, radius + 1):
            for m in range(-radius, radius + 1):
                t = m + n * x
                e = y * n * n + t * t / y
                acc += exp(-M_PI * alpha * e)
    return acc


def lattice_sum_dy(double alpha, double x, double y, int radius):
    cdef double acc = 0.0
    cdef double e, t, u2
    cdef int n, m
    with nogil:
        for n in range(-radius, radius + 1):
            for m in range(-radius, radius + 1):
                t = (m + n * x) / y
                u2 = t * t
                e = y * n * n + u2 * y
                acc += (u2 - n * n) * exp(-M_PI * alpha * e)
    return M_PI * alpha * acc


def lattice_sums_radial(double alpha, double x, double y, int radius):
    cdef double quad_a = 0.0, sq_2a = 0.0, sq_a = 0.0, quad_2a = 0.0
    cdef double e, t, u2, w2, ea, e2a
    cdef int n, m
    with nogil:
        for n in range(-radius, radius + 1):
            for m in range(-radius, radius + 1):
                t = (m + n * x) / y
                u2 = t * t
                e = y * n * n + u2 * y
                w2 = (n * n - u2) * (n * n - u2)
                ea = exp(-M_PI * alpha * e)
                e2a = ea * ea
                quad_a += w2 * ea
                quad_2a += w2 * e2a
                sq_a += n * n * ea
                sq_2a += n * n * e2a
    return quad_a, sq_2a, sq_a, quad_2a


def lattice_sum_grid(double alpha, xs, ys, int radius, int chunk=512):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64).ravel()
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i, npts = xv.shape[0]
    cdef double acc, e, t, x, y
    cdef int n, m
    with nogil:
        for i in range(npts):
            x = xv[i]
            y = yv[i]
            acc = 0.0
            for n in range(-radius, radius + 1):
                for m in range(-radius, radius + 1):
                    t = m + n * x
                    e = y * n * n + t * t / y
                    acc += exp(-M_PI * alpha * e)
            ov[i] = acc
    return out
