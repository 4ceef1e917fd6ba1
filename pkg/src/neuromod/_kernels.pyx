# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled iteration kernels.

Mirror of _kernels_py.py. Uses libc exp/tanh (the same libm CPython's
math module calls) and is built with -ffp-contract=off so results stay
bitwise-identical to the pure-Python fallback.
"""

from libc.math cimport exp, tanh, fabs

import numpy as np


cdef double _LIMIT = 1e12


cdef inline double _sig(double x) nogil:
    cdef double e
    if x >= 0.0:
        return 1.0 / (1.0 + exp(-x))
    e = exp(x)
    return e / (1.0 + e)


def orbit_single(double b, double gamma, double w, double x0,
                 long transient, long record):
    out_arr = np.empty(record)
    cdef double[:] out = out_arr
    cdef double x = x0
    cdef long napp = 0
    cdef long i
    for i in range(transient):
        x = b + gamma * x + w * _sig(x)
        napp += 1
        if not (fabs(x) <= _LIMIT):
            return out_arr[:0], napp
    for i in range(record):
        out[i] = x
        x = b + gamma * x + w * _sig(x)
        napp += 1
        if not (fabs(x) <= _LIMIT):
            return out_arr[:i + 1], napp
    return out_arr, -1


def orbit_two(double b1, double b2, double w11, double w12, double w21,
              double w22, double alpha, double beta, double x0, double y0,
              long transient, long record):
    xs_arr = np.empty(record)
    ys_arr = np.empty(record)
    cdef double[:] xs = xs_arr
    cdef double[:] ys = ys_arr
    cdef double x = x0
    cdef double y = y0
    cdef double t1, t2, xn, yn
    cdef long napp = 0
    cdef long i
    for i in range(transient):
        t1 = tanh(alpha * x)
        t2 = tanh(beta * y)
        xn = b1 + w11 * t1 + w12 * t2
        yn = b2 + w21 * t1 + w22 * t2
        x = xn
        y = yn
        napp += 1
        if not (fabs(x) <= _LIMIT and fabs(y) <= _LIMIT):
            return xs_arr[:0], ys_arr[:0], napp
    for i in range(record):
        xs[i] = x
        ys[i] = y
        t1 = tanh(alpha * x)
        t2 = tanh(beta * y)
        xn = b1 + w11 * t1 + w12 * t2
        yn = b2 + w21 * t1 + w22 * t2
        x = xn
        y = yn
        napp += 1
        if not (fabs(x) <= _LIMIT and fabs(y) <= _LIMIT):
            return xs_arr[:i + 1], ys_arr[:i + 1], napp
    return xs_arr, ys_arr, -1


def scan_single(double[:] b, double[:] gamma, double[:] w, long iters, double x0):
    cdef long n = b.shape[0]
    xs_arr = np.empty(n)
    cdef double[:] xs = xs_arr
    cdef double x = x0
    cdef double bi, gi, wi
    cdef long napp = 0
    cdef long i, k
    for i in range(n):
        bi = b[i]
        gi = gamma[i]
        wi = w[i]
        for k in range(iters):
            x = bi + gi * x + wi * _sig(x)
            napp += 1
            if not (fabs(x) <= _LIMIT):
                return xs_arr[:i], i, napp
        xs[i] = x
    return xs_arr, n, -1


def scan_two(double[:] b1, double[:] b2, double[:] w11, double[:] w12,
             double[:] w21, double[:] w22, double[:] alpha, double[:] beta,
             long iters, double x0, double y0):
    cdef long n = b1.shape[0]
    xs_arr = np.empty(n)
    ys_arr = np.empty(n)
    cdef double[:] xs = xs_arr
    cdef double[:] ys = ys_arr
    cdef double x = x0
    cdef double y = y0
    cdef double c1, c2, v11, v12, v21, v22, a, be, t1, t2, xn, yn
    cdef long napp = 0
    cdef long i, k
    for i in range(n):
        c1 = b1[i]
        c2 = b2[i]
        v11 = w11[i]
        v12 = w12[i]
        v21 = w21[i]
        v22 = w22[i]
        a = alpha[i]
        be = beta[i]
        for k in range(iters):
            t1 = tanh(a * x)
            t2 = tanh(be * y)
            xn = c1 + v11 * t1 + v12 * t2
            yn = c2 + v21 * t1 + v22 * t2
            x = xn
            y = yn
            napp += 1
            if not (fabs(x) <= _LIMIT and fabs(y) <= _LIMIT):
                return xs_arr[:i], ys_arr[:i], i, napp
        xs[i] = x
        ys[i] = y
    return xs_arr, ys_arr, n, -1
