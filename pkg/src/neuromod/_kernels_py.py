"""Pure-Python iteration kernels.

Statement-for-statement mirror of _kernels.pyx; the compiled module must
produce bitwise-identical arrays (same libm calls, same expression order,
no FMA contraction on the compiled side), which tests assert.

Divergence contract: dstep is the number of map applications performed
when |x| <= 1e12 first failed (NaN included), or -1 for a clean run.
Scan kernels also return the number of fully recorded parameter steps.
"""

from math import exp, tanh

import numpy as np

_LIMIT = 1e12


def _sig(x):
    if x >= 0.0:
        return 1.0 / (1.0 + exp(-x))
    e = exp(x)
    return e / (1.0 + e)


def orbit_single(b, gamma, w, x0, transient, record):
    out = np.empty(record)
    x = x0
    napp = 0
    for _ in range(transient):
        x = b + gamma * x + w * _sig(x)
        napp += 1
        if not (abs(x) <= _LIMIT):
            return out[:0], napp
    for i in range(record):
        out[i] = x
        x = b + gamma * x + w * _sig(x)
        napp += 1
        if not (abs(x) <= _LIMIT):
            return out[:i + 1], napp
    return out, -1


def orbit_two(b1, b2, w11, w12, w21, w22, alpha, beta, x0, y0, transient, record):
    xs = np.empty(record)
    ys = np.empty(record)
    x = x0
    y = y0
    napp = 0
    for _ in range(transient):
        t1 = tanh(alpha * x)
        t2 = tanh(beta * y)
        xn = b1 + w11 * t1 + w12 * t2
        yn = b2 + w21 * t1 + w22 * t2
        x = xn
        y = yn
        napp += 1
        if not (abs(x) <= _LIMIT and abs(y) <= _LIMIT):
            return xs[:0], ys[:0], napp
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
        if not (abs(x) <= _LIMIT and abs(y) <= _LIMIT):
            return xs[:i + 1], ys[:i + 1], napp
    return xs, ys, -1


def scan_single(b, gamma, w, iters, x0):
    n = len(b)
    xs = np.empty(n)
    x = x0
    napp = 0
    for i in range(n):
        bi = b[i]
        gi = gamma[i]
        wi = w[i]
        for _ in range(iters):
            x = bi + gi * x + wi * _sig(x)
            napp += 1
            if not (abs(x) <= _LIMIT):
                return xs[:i], i, napp
        xs[i] = x
    return xs, n, -1


def scan_two(b1, b2, w11, w12, w21, w22, alpha, beta, iters, x0, y0):
    n = len(b1)
    xs = np.empty(n)
    ys = np.empty(n)
    x = x0
    y = y0
    napp = 0
    for i in range(n):
        c1 = b1[i]
        c2 = b2[i]
        v11 = w11[i]
        v12 = w12[i]
        v21 = w21[i]
        v22 = w22[i]
        a = alpha[i]
        be = beta[i]
        for _ in range(iters):
            t1 = tanh(a * x)
            t2 = tanh(be * y)
            xn = c1 + v11 * t1 + v12 * t2
            yn = c2 + v21 * t1 + v22 * t2
            x = xn
            y = yn
            napp += 1
            if not (abs(x) <= _LIMIT and abs(y) <= _LIMIT):
                return xs[:i], ys[:i], i, napp
        xs[i] = x
        ys[i] = y
    return xs, ys, n, -1
