"""Transfer functions and their exact derivatives.

Two kinds: the unipolar logistic function (gain fixed at 1) used by the
single-neuron map, and the bipolar tanh with gain used by the two-neuron
module. Everything downstream (Jacobians, boundary curves, kernels) goes
through these two so the arithmetic is identical everywhere.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError

UNIPOLAR = "unipolar"
BIPOLAR = "bipolar"


def _check_finite(x):
    if not math.isfinite(x):
        raise DomainError(f"activation must be finite, got {x!r}")


def sigmoid(x):
    # branch at 0 keeps exp() out of overflow for large |x|
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def sigmoid_prime(x):
    s = sigmoid(x)
    return s * (1.0 - s)


def sech2(z):
    # 1 - tanh^2, never overflows; underflows cleanly to 0 for |z| > ~19
    t = math.tanh(z)
    return 1.0 - t * t


@dataclass(frozen=True)
class TransferFunction:
    kind: str = UNIPOLAR
    gain: float = 1.0

    def __post_init__(self):
        if self.kind not in (UNIPOLAR, BIPOLAR):
            raise ValidationError(f"unknown transfer kind {self.kind!r}", field="kind")
        if not (math.isfinite(self.gain) and self.gain > 0.0):
            raise ValidationError("gain must be a positive finite real", field="gain")
        if self.kind == UNIPOLAR and self.gain != 1.0:
            raise ValidationError("unipolar transfer has gain fixed at 1", field="gain")

    def evaluate(self, x):
        _check_finite(x)
        if self.kind == UNIPOLAR:
            return sigmoid(x)
        return math.tanh(self.gain * x)

    def derivative(self, x):
        _check_finite(x)
        if self.kind == UNIPOLAR:
            return sigmoid_prime(x)
        return self.gain * sech2(self.gain * x)


def unipolar():
    return TransferFunction(UNIPOLAR, 1.0)


def bipolar(gain):
    return TransferFunction(BIPOLAR, gain)
