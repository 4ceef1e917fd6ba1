"""Numerical toolkit for one- and two-neuron discrete maps: stability
boundary curves, feedback-ramped bifurcation scans with hysteresis
detection, and FFT-based orbit classification."""

from .errors import DivergenceError, DomainError, NeuromodError, ValidationError
from .maps import (
    SingleNeuronParams,
    State2,
    TwoNeuronParams,
    jacobian_single,
    jacobian_two,
    orbit,
    step_single,
    step_two,
)
from .fixed_points import FixedPoint, find_fixed_single, find_fixed_two
from .stability_curves import (
    BoundaryCurve,
    default_grid,
    single_neuron_boundary,
    two_neuron_boundary,
)
from .bifurcation import (
    HysteresisReport,
    RampSchedule,
    ScanConfig,
    ScanResult,
    Window,
    detect_hysteresis,
    oscillation_windows,
    run_ramp_scan,
)
from .spectrum import SpectrumResult, classify_orbit, classify_samples, power_spectrum
from .scenario import Scenario, load_scenario, save_scenario, scenario_from_dict, scenario_to_dict
from .presets import preset, preset_ids, preset_listing
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundaryCurve",
    "DivergenceError",
    "DomainError",
    "FixedPoint",
    "HysteresisReport",
    "NeuromodError",
    "RampSchedule",
    "Scenario",
    "ScanConfig",
    "ScanResult",
    "SingleNeuronParams",
    "SpectrumResult",
    "State2",
    "TwoNeuronParams",
    "ValidationError",
    "Window",
    "classify_orbit",
    "classify_samples",
    "default_grid",
    "detect_hysteresis",
    "find_fixed_single",
    "find_fixed_two",
    "jacobian_single",
    "jacobian_two",
    "load_scenario",
    "orbit",
    "oscillation_windows",
    "power_spectrum",
    "preset",
    "preset_ids",
    "preset_listing",
    "run_ramp_scan",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "single_neuron_boundary",
    "step_single",
    "step_two",
    "two_neuron_boundary",
    "__version__",
]
