# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels.

Contract and reference implementation live in ``_kernels_py``; the two are
cross-checked by tests/test_kernels.py and compared by the benchmark.
"""

import numpy as np

from libc.math cimport cos, sin

BACKEND = "compiled"


cdef inline double complex _symbol(const double[::1] coeffs, double w) noexcept:
    # Horner in z = exp(-iw), no offset phase (taps assumed at 0..n-1)
    cdef Py_ssize_t n = coeffs.shape[0]
    cdef double zr = cos(w)
    cdef double zi = -sin(w)
    cdef double pr = coeffs[n - 1]
    cdef double pi = 0.0
    cdef double tmp
    cdef Py_ssize_t t
    for t in range(n - 2, -1, -1):
        tmp = pr * zr - pi * zi + coeffs[t]
        pi = pr * zi + pi * zr
        pr = tmp
    return pr + pi * 1j


def eval_symbol_grid(coeffs, offset, freqs):
    cdef const double[::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(freqs, dtype=np.float64)
    cdef long off = offset
    cdef Py_ssize_t m = w.shape[0]
    out_arr = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double complex val
    cdef double phase
    for i in range(m):
        val = _symbol(c, w[i])
        if off != 0:
            phase = off * w[i]
            val = val * (cos(phase) - sin(phase) * 1j)
        out[i] = val
    return out_arr


def refine_step(coeffs, values, stride, n_out):
    cdef const double[::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef long strd = stride
    cdef Py_ssize_t n = n_out
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t n_in = v.shape[0]
    cdef Py_ssize_t nc = c.shape[0]
    cdef Py_ssize_t t, i, i_lo, i_hi, j
    cdef long d
    cdef double cc
    for t in range(nc):
        d = t * strd
        cc = 2.0 * c[t]
        i_lo = (d + 1) // 2
        i_hi = (n_in - 1 + d) // 2
        if i_hi > n - 1:
            i_hi = n - 1
        j = 2 * i_lo - d
        for i in range(i_lo, i_hi + 1):
            out[i] += cc * v[j]
            j += 2
    return out_arr


def riesz_values(coeffs, freqs, levels, shifts):
    cdef const double[::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(freqs, dtype=np.float64)
    cdef int J = levels
    cdef int K = shifts
    cdef Py_ssize_t m = w.shape[0]
    out_arr = np.zeros(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t g
    cdef int k, j
    cdef double twopi = 6.283185307179586476925287
    cdef double base, v
    cdef double complex acc
    for g in range(m):
        for k in range(-K, K + 1):
            base = w[g] + twopi * k
            acc = 1.0 + 0.0j
            v = base
            for j in range(J):
                v *= 0.5
                acc = acc * _symbol(c, v)
            out[g] += acc.real * acc.real + acc.imag * acc.imag
    return out_arr
