# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate kernels (hot path).

Same contract as ``_pykernels``: in-place strided updates on a contiguous
complex128 amplitude buffer, qubit 0 = least-significant index bit.
"""

from libc.math cimport cos, sin, sqrt

BACKEND_NAME = "c"

cdef double _RSQRT2 = 1.0 / sqrt(2.0)


def hadamard(double complex[::1] amps, Py_ssize_t target):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = 1 << target
    cdef Py_ssize_t blocks = n >> (target + 1)
    cdef Py_ssize_t blk, off, i0, i1
    cdef double complex a, b
    with nogil:
        for blk in range(blocks):
            i0 = blk << (target + 1)
            for off in range(step):
                i1 = i0 + step
                a = amps[i0]
                b = amps[i1]
                amps[i0] = (a + b) * _RSQRT2
                amps[i1] = (a - b) * _RSQRT2
                i0 += 1


def phase(double complex[::1] amps, Py_ssize_t target, double theta):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = 1 << target
    cdef Py_ssize_t blocks = n >> (target + 1)
    cdef Py_ssize_t blk, off, i
    cdef double complex f = cos(theta) + 1j * sin(theta)
    with nogil:
        for blk in range(blocks):
            i = (blk << (target + 1)) + step
            for off in range(step):
                amps[i] = amps[i] * f
                i += 1


def cphase(double complex[::1] amps, Py_ssize_t control, Py_ssize_t target,
           double theta):
    cdef Py_ssize_t hi = control if control > target else target
    cdef Py_ssize_t lo = target if control > target else control
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t sh = 1 << hi
    cdef Py_ssize_t sl = 1 << lo
    cdef Py_ssize_t outer = n >> (hi + 1)
    cdef Py_ssize_t inner = sh >> (lo + 1)
    cdef Py_ssize_t oi, ii, ci, i
    cdef double complex f = cos(theta) + 1j * sin(theta)
    with nogil:
        for oi in range(outer):
            for ii in range(inner):
                i = (oi << (hi + 1)) + sh + (ii << (lo + 1)) + sl
                for ci in range(sl):
                    amps[i] = amps[i] * f
                    i += 1


def swap(double complex[::1] amps, Py_ssize_t a, Py_ssize_t b):
    cdef Py_ssize_t hi = a if a > b else b
    cdef Py_ssize_t lo = b if a > b else a
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t sh = 1 << hi
    cdef Py_ssize_t sl = 1 << lo
    cdef Py_ssize_t outer = n >> (hi + 1)
    cdef Py_ssize_t inner = sh >> (lo + 1)
    cdef Py_ssize_t oi, ii, ci, i0, i1
    cdef double complex t
    with nogil:
        for oi in range(outer):
            for ii in range(inner):
                i0 = (oi << (hi + 1)) + (ii << (lo + 1)) + sl
                i1 = (oi << (hi + 1)) + sh + (ii << (lo + 1))
                for ci in range(sl):
                    t = amps[i0]
                    amps[i0] = amps[i1]
                    amps[i1] = t
                    i0 += 1
                    i1 += 1


def diagonal(double complex[::1] amps, const double[::1] phases):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            amps[i] = amps[i] * (cos(phases[i]) + 1j * sin(phases[i]))
