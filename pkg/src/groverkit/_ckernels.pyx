# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same contract as ``groverkit._kernels_py``.

Amplitudes are handled through an interleaved ``double`` view
(re0, im0, re1, im1, ...) to keep the inner loops on plain floating point.
"""

import numpy as np

from libc.math cimport fabs as abs
from libc.string cimport memcpy

cdef double SQRT1_2 = 0.70710678118654752440


cdef inline double[::1] _flat(amps):
    return amps.view(np.float64)


def hadamard(amps, int q):
    cdef double[::1] v = _flat(amps)
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t step = (<Py_ssize_t>2) << q
    cdef Py_ssize_t base, j, i0, i1
    cdef double a, b
    with nogil:
        base = 0
        while base < size:
            for j in range(step):
                i0 = base + j
                i1 = i0 + step
                a = v[i0]
                b = v[i1]
                v[i0] = (a + b) * SQRT1_2
                v[i1] = (a - b) * SQRT1_2
            base += 2 * step


def pauli_x(amps, int q):
    cdef double[::1] v = _flat(amps)
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t step = (<Py_ssize_t>2) << q
    cdef Py_ssize_t base, j, i0
    cdef double tmp
    with nogil:
        base = 0
        while base < size:
            for j in range(step):
                i0 = base + j
                tmp = v[i0]
                v[i0] = v[i0 + step]
                v[i0 + step] = tmp
            base += 2 * step


def pauli_z(amps, int q):
    cdef double[::1] v = _flat(amps)
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t step = (<Py_ssize_t>2) << q
    cdef Py_ssize_t base, j
    with nogil:
        base = step
        while base < size:
            for j in range(base, base + step):
                v[j] = -v[j]
            base += 2 * step


def phase_flip_masked(amps, Py_ssize_t mask, Py_ssize_t value):
    cdef double[::1] v = _flat(amps)
    cdef Py_ssize_t size = v.shape[0] // 2
    cdef Py_ssize_t i
    with nogil:
        if mask == size - 1:
            v[2 * value] = -v[2 * value]
            v[2 * value + 1] = -v[2 * value + 1]
        else:
            for i in range(size):
                if (i & mask) == value:
                    v[2 * i] = -v[2 * i]
                    v[2 * i + 1] = -v[2 * i + 1]


def add_const(amps, Py_ssize_t k, int lo, int m):
    # each block of 2**lo amplitudes with field value x moves to field value
    # x + k: per high block this is a rotation, done as two contiguous copies
    cdef double[::1] src = _flat(amps)
    out_arr = np.empty_like(amps)
    cdef double[::1] dst = out_arr.view(np.float64)
    cdef Py_ssize_t size = src.shape[0]
    cdef Py_ssize_t low = (<Py_ssize_t>2) << lo
    cdef Py_ssize_t span = low << m
    cdef Py_ssize_t width = (<Py_ssize_t>1) << m
    cdef Py_ssize_t shift = k & (width - 1)
    cdef Py_ssize_t head = (width - shift) * low
    cdef Py_ssize_t tail = shift * low
    cdef Py_ssize_t base
    with nogil:
        base = 0
        while base < size:
            memcpy(&dst[base + tail], &src[base], head * sizeof(double))
            if tail:
                memcpy(&dst[base], &src[base + head], tail * sizeof(double))
            base += span
    return out_arr


cdef inline void _neumaier(double x, double* total, double* comp) noexcept nogil:
    cdef double t = total[0] + x
    if abs(total[0]) >= abs(x):
        comp[0] += (total[0] - t) + x
    else:
        comp[0] += (x - t) + total[0]
    total[0] = t


def reflect_about_mean(amps):
    # blocked sum, block totals combined with compensation: a plain running
    # sum drifts the norm by ~1e-9 over hundreds of iterations at 20 qubits
    cdef double[::1] v = _flat(amps)
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t i, end
    cdef double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0, two_re, two_im
    cdef double r0, r1, i0, i1
    with nogil:
        i = 0
        while i < size:
            end = i + 1024
            if end > size:
                end = size
            r0 = r1 = i0 = i1 = 0.0
            while i + 4 <= end:
                r0 += v[i]
                i0 += v[i + 1]
                r1 += v[i + 2]
                i1 += v[i + 3]
                i += 4
            while i < end:
                r0 += v[i]
                i0 += v[i + 1]
                i += 2
            _neumaier(r0 + r1, &re, &re_c)
            _neumaier(i0 + i1, &im, &im_c)
        two_re = 4.0 * (re + re_c) / size
        two_im = 4.0 * (im + im_c) / size
        i = 0
        while i < size:
            v[i] = two_re - v[i]
            v[i + 1] = two_im - v[i + 1]
            i += 2
