import math
import random

import pytest

from neuromod.errors import ValidationError
from neuromod.transfer import TransferFunction, bipolar, sech2, sigmoid, sigmoid_prime, unipolar


def test_sigmoid_basic_values():
    assert sigmoid(0.0) == 0.5
    assert math.isclose(sigmoid(1.0), 1.0 / (1.0 + math.exp(-1.0)), rel_tol=1e-15)
    assert sigmoid(800.0) == 1.0
    assert sigmoid(-800.0) == 0.0


def test_sigmoid_symmetry():
    rng = random.Random(7)
    for _ in range(200):
        z = rng.uniform(-30, 30)
        assert math.isclose(sigmoid(z) + sigmoid(-z), 1.0, abs_tol=1e-15)


def test_sigmoid_prime_is_s_times_one_minus_s():
    rng = random.Random(8)
    for _ in range(200):
        z = rng.uniform(-30, 30)
        s = sigmoid(z)
        assert math.isclose(sigmoid_prime(z), s * (1.0 - s), rel_tol=1e-13, abs_tol=1e-300)
    assert sigmoid_prime(0.0) == 0.25


def test_sigmoid_prime_matches_central_difference():
    # rel tolerance widens near saturation where the difference cancels
    h = 1e-6
    for z in (-5.0, -1.0, 0.0, 0.3, 2.0, 7.0):
        fd = (sigmoid(z + h) - sigmoid(z - h)) / (2 * h)
        assert math.isclose(sigmoid_prime(z), fd, rel_tol=2e-7)


def test_sech2_identity():
    rng = random.Random(9)
    for _ in range(200):
        z = rng.uniform(-20, 20)
        t = math.tanh(z)
        assert sech2(z) == 1.0 - t * t
    assert sech2(0.0) == 1.0


def test_sech2_matches_tanh_derivative():
    h = 1e-6
    for z in (-3.0, -0.9, 0.0, 0.9, 2.5):
        fd = (math.tanh(z + h) - math.tanh(z - h)) / (2 * h)
        assert math.isclose(sech2(z), fd, rel_tol=1e-8)


def test_unipolar_bipolar_objects():
    u = unipolar()
    b = bipolar(1.0)
    assert u.evaluate(0.0) == 0.5
    assert b.evaluate(0.0) == 0.0
    assert math.isclose(b.evaluate(0.9), math.tanh(0.9), rel_tol=1e-15)
    assert u.derivative(0.0) == 0.25
    assert b.derivative(0.0) == 1.0


def test_bipolar_gain_scales_argument():
    b = bipolar(0.3)
    assert math.isclose(b.evaluate(3.0), math.tanh(0.9), rel_tol=1e-15)
    assert math.isclose(b.derivative(3.0), 0.3 * sech2(0.9), rel_tol=1e-15)


def test_transfer_validation():
    with pytest.raises(ValidationError):
        TransferFunction(kind="other")
    with pytest.raises(ValidationError):
        bipolar(0.0)
    with pytest.raises(ValidationError):
        TransferFunction(kind="unipolar", gain=2.0)
