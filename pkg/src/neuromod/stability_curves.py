"""Analytic stability boundary curves in parameter planes.

Single neuron, plane (b, w), parametrized by the fixed-point location x:
    B_plus  (fold, f'(x) = +1):  w = (1-gamma)/sigmoid'(x)
    B_minus (flip, f'(x) = -1):  w = -(1+gamma)/sigmoid'(x)
and in both cases b = (1-gamma)*x - w*sigmoid(x), the fixed-point condition
solved for b (algebraically the same as the closed form in terms of
1/(1-sigmoid), but this form cancels to the last ulp in residual checks).

Two-neuron module (w22 = 0), plane (b1, w12), parametrized by x:
    y  = b2 + w21*tanh(alpha*x)
    fold:  w12 = (1 - alpha*w11*s1) / (alpha*beta*w21*s1*s2)
    flip:  w12 = (1 + alpha*w11*s1) / (alpha*beta*w21*s1*s2)
    ns:    w12 = -1 / (alpha*beta*w21*s1*s2)      (requires |tr J| < 2)
    b1 = x - w11*tanh(alpha*x) - w12*tanh(beta*y)
with s1 = sech2(alpha*x), s2 = sech2(beta*y).
"""

import math
from dataclasses import dataclass, field

from .errors import ValidationError
from .transfer import sech2, sigmoid, sigmoid_prime

FOLD = "fold"
FLIP = "flip"
NS = "neimark_sacker"

B_PLUS = "B_plus"
B_MINUS = "B_minus"

CLIP_LIMIT = 1e6


def default_grid(n=2001, lo=-8.0, hi=8.0):
    h = (hi - lo) / (n - 1)
    return [lo + i * h for i in range(n)]


@dataclass(frozen=True)
class CurveSample:
    x: float
    point: tuple  # (first plane parameter, second plane parameter)


@dataclass(frozen=True)
class BoundaryCurve:
    kind: str
    plane: tuple
    samples: tuple
    clipped: int = 0  # samples dropped for |second param| > 1e6
    trace_dropped: int = 0  # ns samples dropped for |tr J| >= 2
    notes: tuple = field(default_factory=tuple)


def single_neuron_boundary(gamma, branch, x_grid=None):
    if not (0.0 < gamma < 1.0):
        raise ValidationError("gamma must lie in (0,1)", field="gamma")
    if branch not in (B_PLUS, B_MINUS):
        raise ValidationError(f"branch must be {B_PLUS} or {B_MINUS}", field="branch")
    if x_grid is None:
        x_grid = default_grid()
    samples = []
    clipped = 0
    for x in x_grid:
        sp = sigmoid_prime(x)
        if branch == B_PLUS:
            w = (1.0 - gamma) / sp
        else:
            w = -(1.0 + gamma) / sp
        if not (abs(w) <= CLIP_LIMIT):
            clipped += 1
            continue
        b = (1.0 - gamma) * x - w * sigmoid(x)
        samples.append(CurveSample(x, (b, w)))
    kind = FOLD if branch == B_PLUS else FLIP
    return BoundaryCurve(kind, ("b", "w"), tuple(samples), clipped=clipped)


def two_neuron_boundary(kind, w11, b2, w21, alpha, beta, x_grid=None):
    if kind not in (FOLD, FLIP, NS):
        raise ValidationError(f"kind must be one of {FOLD}, {FLIP}, {NS}", field="kind")
    if w21 == 0.0:
        raise ValidationError("w21 must be nonzero (the curve formulas divide by it)", field="w21")
    if alpha <= 0.0 or beta <= 0.0:
        raise ValidationError("alpha and beta must be positive")
    if x_grid is None:
        x_grid = default_grid()
    samples = []
    clipped = 0
    trace_dropped = 0
    for x in x_grid:
        t1 = math.tanh(alpha * x)
        s1 = 1.0 - t1 * t1
        y = b2 + w21 * t1
        t2 = math.tanh(beta * y)
        s2 = 1.0 - t2 * t2
        tr = alpha * w11 * s1
        if kind == NS and not (abs(tr) < 2.0):
            trace_dropped += 1
            continue
        denom = alpha * beta * w21 * s1 * s2
        if denom == 0.0:
            clipped += 1
            continue
        if kind == FOLD:
            w12 = (1.0 - tr) / denom
        elif kind == FLIP:
            w12 = (1.0 + tr) / denom
        else:
            w12 = -1.0 / denom
        if not (abs(w12) <= CLIP_LIMIT):
            clipped += 1
            continue
        b1 = x - w11 * t1 - w12 * t2
        samples.append(CurveSample(x, (b1, w12)))
    notes = []
    if w11 == 0.0 and kind in (FOLD, FLIP):
        notes.append("w11=0: fold and flip parametrizations coincide pointwise")
    return BoundaryCurve(
        kind, ("b1", "w12"), tuple(samples),
        clipped=clipped, trace_dropped=trace_dropped, notes=tuple(notes),
    )
