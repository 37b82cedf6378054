# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled diffusion kernel; same operation order as ``_kernel_py``."""

import numpy as np
cimport numpy as cnp


def step(const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
         const double[::1] energy, double decay):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t u, v, j, lo, hi
    cdef double e, share
    for u in range(n):
        e = energy[u]
        lo = indptr[u]
        hi = indptr[u + 1]
        if e == 0.0 or hi == lo:
            continue
        share = e / <double>(hi - lo)
        for j in range(lo, hi):
            out[indices[j]] += share
    for v in range(n):
        out[v] = decay * out[v]
    return out_arr


def run(const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
        const double[::1] initial, double decay, long max_steps, double epsilon):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] acc_arr = np.array(initial, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cur_arr = np.array(initial, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nxt_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] acc = acc_arr
    cdef double[::1] cur = cur_arr
    cdef double[::1] nxt = nxt_arr
    cdef double[::1] tmp
    cdef Py_ssize_t u, v, j, lo, hi
    cdef long steps = 0
    cdef double e, share, x, peak
    while steps < max_steps:
        for v in range(n):
            nxt[v] = 0.0
        for u in range(n):
            e = cur[u]
            lo = indptr[u]
            hi = indptr[u + 1]
            if e == 0.0 or hi == lo:
                continue
            share = e / <double>(hi - lo)
            for j in range(lo, hi):
                nxt[indices[j]] += share
        peak = 0.0
        for v in range(n):
            x = decay * nxt[v]
            nxt[v] = x
            acc[v] += x
            if x > peak:
                peak = x
        tmp = cur
        cur = nxt
        nxt = tmp
        steps += 1
        if peak < epsilon:
            break
    return acc_arr, steps
