"""The two discrete systems: one-step evaluation, orbits, analytic Jacobians.

Single neuron:   x' = b + gamma*x + w*sigmoid(x),          0 < gamma < 1
Two-neuron:      x' = b1 + w11*tanh(alpha*x) + w12*tanh(beta*y)
                 y' = b2 + w21*tanh(alpha*x) + w22*tanh(beta*y)

Both components of the two-neuron step read the previous state
(simultaneous update). Long orbits run through the iteration kernels.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DivergenceError, DomainError, ValidationError
from .transfer import TransferFunction, sech2, sigmoid_prime, unipolar

DIVERGENCE_LIMIT = 1e12


def _require_finite(name, v):
    if not math.isfinite(v):
        raise ValidationError(f"{name} must be finite, got {v!r}", field=name)


@dataclass(frozen=True)
class SingleNeuronParams:
    b: float
    gamma: float
    w: float
    tf: TransferFunction = field(default_factory=unipolar)

    def __post_init__(self):
        for name in ("b", "gamma", "w"):
            _require_finite(name, getattr(self, name))
        if not (0.0 < self.gamma < 1.0):
            raise ValidationError("gamma must lie in (0,1)", field="gamma")
        if self.tf.kind != "unipolar":
            raise ValidationError("single-neuron map uses the unipolar transfer", field="tf")


@dataclass(frozen=True)
class TwoNeuronParams:
    b1: float
    b2: float
    w11: float
    w12: float
    w21: float
    w22: float = 0.0
    alpha: float = 1.0
    beta: float = 0.3

    def __post_init__(self):
        for name in ("b1", "b2", "w11", "w12", "w21", "w22", "alpha", "beta"):
            _require_finite(name, getattr(self, name))
        if self.alpha <= 0.0:
            raise ValidationError("alpha must be positive", field="alpha")
        if self.beta <= 0.0:
            raise ValidationError("beta must be positive", field="beta")

    def require_w22_zero(self):
        # fixed-point and boundary analysis is derived under w22 = 0
        if self.w22 != 0.0:
            raise ValidationError("analysis requires w22 = 0", field="w22")


@dataclass(frozen=True)
class State2:
    x: float
    y: float

    def __post_init__(self):
        _require_finite("x", self.x)
        _require_finite("y", self.y)


def step_single(p, x):
    _require_finite("x", x)
    return p.b + p.gamma * x + p.w * p.tf.evaluate(x)


def step_two(p, s):
    t1 = math.tanh(p.alpha * s.x)
    t2 = math.tanh(p.beta * s.y)
    return State2(
        p.b1 + p.w11 * t1 + p.w12 * t2,
        p.b2 + p.w21 * t1 + p.w22 * t2,
    )


def jacobian_single(p, x):
    _require_finite("x", x)
    return p.gamma + p.w * sigmoid_prime(x)


def jacobian_two(p, s):
    # d(x',y')/d(x,y); row 2 differentiates y' = b2 + w21*s1(x) + w22*s2(y)
    s1 = sech2(p.alpha * s.x)
    s2 = sech2(p.beta * s.y)
    return np.array(
        [
            [p.alpha * p.w11 * s1, p.beta * p.w12 * s2],
            [p.alpha * p.w21 * s1, p.beta * p.w22 * s2],
        ]
    )


def orbit(p, s0, n_transient, n_record):
    """Iterate n_transient steps unrecorded, then record n_record states.

    Returns shape (n_record,) for the single neuron, (n_record, 2) for the
    two-neuron module. Raises DivergenceError (with the step index) if any
    iterate leaves |x| <= 1e12.
    """
    if n_transient < 0 or n_record < 0:
        raise ValidationError("transient and record counts must be >= 0")
    if isinstance(p, SingleNeuronParams):
        x0 = s0.x if isinstance(s0, State2) else float(s0)
        _require_finite("x0", x0)
        xs, dstep = kernels.orbit_single(p.b, p.gamma, p.w, x0, n_transient, n_record)
        if dstep >= 0:
            raise DivergenceError(dstep)
        return xs
    if isinstance(s0, State2):
        x0, y0 = s0.x, s0.y
    else:
        x0, y0 = float(s0[0]), float(s0[1])
        _require_finite("x0", x0)
        _require_finite("y0", y0)
    xs, ys, dstep = kernels.orbit_two(
        p.b1, p.b2, p.w11, p.w12, p.w21, p.w22, p.alpha, p.beta,
        x0, y0, n_transient, n_record,
    )
    if dstep >= 0:
        raise DivergenceError(dstep)
    return np.stack([xs, ys], axis=1)
