"""Figure presets: canned scenarios reproducing the toolkit's demo figures.

Ids follow the figure numbering (1, 2a, ... 13); the -text ids are variants
where two published ranges exist for the same panel. A couple of initial
states are not stated anywhere and are marked inferred in the description.
"""

from .errors import ValidationError
from .bifurcation import RampSchedule, ScanConfig
from .maps import SingleNeuronParams, TwoNeuronParams
from .scenario import CurveConfig, Scenario

STEP = 0.01

_FAMILY_6 = {"w11": 0.0, "b2": 3.0, "w21": 5.0, "alpha": 1.0, "beta": 0.3}
_FAMILY_8 = {"w11": 1.0, "b2": 1.0, "w21": 2.0, "alpha": 1.0, "beta": 0.3}
_FAMILY_10 = {"w11": -2.0, "b2": -3.0, "w21": 5.0, "alpha": 1.0, "beta": 0.3}


def _single_curves(fid, desc, gamma):
    return Scenario(
        id=fid, description=desc, system="single", task="curve",
        params=SingleNeuronParams(b=0.0, gamma=gamma, w=0.0),
        curve=CurveConfig(kinds=("B_plus", "B_minus")),
    )


def _two_curves(fid, desc, family):
    return Scenario(
        id=fid, description=desc, system="two", task="curve",
        params=TwoNeuronParams(b1=0.0, w12=0.0, **family),
        curve=CurveConfig(kinds=("fold", "flip", "neimark_sacker")),
    )


def _single_scan(fid, desc, w, schedules, x0):
    b0 = schedules[0].start
    return Scenario(
        id=fid, description=desc, system="single", task="scan",
        params=SingleNeuronParams(b=b0, gamma=0.5, w=w),
        scan=ScanConfig(
            schedules=tuple(schedules), step=STEP, initial_state=float(x0)
        ),
    )


def _two_scan(fid, desc, family, b1, w12, schedules, init):
    return Scenario(
        id=fid, description=desc, system="two", task="scan",
        params=TwoNeuronParams(b1=b1, w12=w12, **family),
        scan=ScanConfig(
            schedules=tuple(schedules), step=STEP,
            initial_state=(float(init[0]), float(init[1])),
        ),
    )


def _build_registry():
    presets = [
        _single_curves("1", "Single-neuron stability boundaries B_plus and B_minus at gamma = 0.5.", 0.5),
        _single_scan(
            "2a",
            "Single neuron, w = 3: bias ramped -5 -> 0 -> -5, step 0.01 (initial state x0 = -10 inferred).",
            3.0, [RampSchedule("b", -5.0, 0.0)], -10.0,
        ),
        _single_scan(
            "2a-text",
            "Variant of 2a with the bias ramp extended to [-5, 5].",
            3.0, [RampSchedule("b", -5.0, 5.0)], -10.0,
        ),
        _single_scan(
            "2b",
            "Single neuron: bias and weight ramped together (b: -5 -> 0, w: 3 -> 5), step 0.01 "
            "(initial state x0 = -10 inferred).",
            3.0, [RampSchedule("b", -5.0, 0.0), RampSchedule("w", 3.0, 5.0)], -10.0,
        ),
        _single_scan(
            "3a",
            "Single neuron: b ramped up then down over [-5, 5] while w runs 10 -> -10 -> 10; start x0 = -10.",
            10.0, [RampSchedule("b", -5.0, 5.0), RampSchedule("w", 10.0, -10.0)], -10.0,
        ),
        _single_scan(
            "3b",
            "As 3a but started from x0 = +10; history dependence picks the other branch.",
            10.0, [RampSchedule("b", -5.0, 5.0), RampSchedule("w", 10.0, -10.0)], 10.0,
        ),
        _two_curves("6", "Two-neuron boundary curves, no self-feedback (w11 = 0, b2 = 3, w21 = 5).", _FAMILY_6),
        _two_scan(
            "7a",
            "Two-neuron scan, w12 = 5: b1 ramped -5 -> 5 -> -5 over the w11 = 0 family; hysteresis loop.",
            _FAMILY_6, -5.0, 5.0, [RampSchedule("b1", -5.0, 5.0)], (-7.0, -2.0),
        ),
        _two_scan(
            "7b",
            "Two-neuron scan, w12 = -4: same ramp as 7a; an oscillatory window replaces the simple loop.",
            _FAMILY_6, -5.0, -4.0, [RampSchedule("b1", -5.0, 5.0)], (-3.0, -2.0),
        ),
        _two_curves("8", "Two-neuron boundary curves, self-excitatory (w11 = 1, b2 = 1, w21 = 2).", _FAMILY_8),
        _two_scan(
            "9a",
            "Two-neuron scan, w12 = 5 over the w11 = 1 family; counterclockwise hysteresis loop.",
            _FAMILY_8, -5.0, 5.0, [RampSchedule("b1", -5.0, 5.0)], (-7.0, -1.0),
        ),
        _two_scan(
            "9b",
            "Two-neuron scan, w12 = -5 over the w11 = 1 family; quasiperiodic and locked windows.",
            _FAMILY_8, -5.0, -5.0, [RampSchedule("b1", -5.0, 5.0)], (-5.0, -1.0),
        ),
        _two_curves("10", "Two-neuron boundary curves, self-inhibitory (w11 = -2, b2 = -3, w21 = 5).", _FAMILY_10),
        _two_scan(
            "11a",
            "Two-neuron scan, w12 = 5 over the w11 = -2 family, b1 in [-8, 8]; "
            "a period-2 cycle encroaches on the loop.",
            _FAMILY_10, -8.0, 5.0, [RampSchedule("b1", -8.0, 8.0)], (-11.0, -8.0),
        ),
        _two_scan(
            "11b",
            "Two-neuron scan, w12 = -1 over the w11 = -2 family.",
            _FAMILY_10, -5.0, -1.0, [RampSchedule("b1", -5.0, 5.0)], (-2.0, -8.0),
        ),
        _two_scan(
            "11b-text",
            "Variant of 11b at w12 = -5.",
            _FAMILY_10, -5.0, -5.0, [RampSchedule("b1", -5.0, 5.0)], (-2.0, -8.0),
        ),
        _two_scan(
            "12a",
            "Two-neuron scan over w12 in [-10, 10] (down first), b1 = 1, started at (-7, -7).",
            _FAMILY_10, 1.0, 10.0, [RampSchedule("w12", 10.0, -10.0)], (-7.0, -7.0),
        ),
        _two_scan(
            "12b",
            "As 12a started at (4, 2); the legs differ, showing history dependence.",
            _FAMILY_10, 1.0, 10.0, [RampSchedule("w12", 10.0, -10.0)], (4.0, 2.0),
        ),
        _two_scan(
            "13",
            "Two-neuron scan, w12 ramped 10 -> 5 -> 10 at b1 = 1 (inferred), started at (4, 2); "
            "open hysteresis cycle.",
            _FAMILY_10, 1.0, 10.0, [RampSchedule("w12", 10.0, 5.0)], (4.0, 2.0),
        ),
    ]
    return {sc.id: sc for sc in presets}


_REGISTRY = _build_registry()


def preset(figure_id):
    try:
        return _REGISTRY[figure_id]
    except KeyError:
        raise ValidationError(f"unknown figure id {figure_id!r}", field="figure_id") from None


def preset_ids():
    return list(_REGISTRY)


def preset_listing():
    return [{"id": sc.id, "description": sc.description} for sc in _REGISTRY.values()]
