"""Feedback-ramped bifurcation scans and hysteresis detection.

A scan walks one or more parameter schedules in lockstep. At each step the
map is applied iterations_per_step times starting from the carried state and
the final state is recorded (one point per parameter value); the state is
carried across the turning point into the reversed leg, which is what makes
the result history-dependent.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ValidationError
from .maps import SingleNeuronParams, State2, TwoNeuronParams

UP_THEN_DOWN = "up_then_down"
DOWN_THEN_UP = "down_then_up"

_SINGLE_NAMES = ("b", "gamma", "w")
_TWO_NAMES = ("b1", "b2", "w11", "w12", "w21", "w22", "alpha", "beta")


@dataclass(frozen=True)
class RampSchedule:
    param: str
    start: float
    end: float
    pattern: str = ""

    def __post_init__(self):
        auto = UP_THEN_DOWN if self.end >= self.start else DOWN_THEN_UP
        if not self.pattern:
            object.__setattr__(self, "pattern", auto)
        elif self.pattern not in (UP_THEN_DOWN, DOWN_THEN_UP):
            raise ValidationError(f"unknown pattern {self.pattern!r}", field="pattern")
        elif self.pattern != auto and self.start != self.end:
            raise ValidationError(
                f"pattern {self.pattern!r} contradicts start={self.start}, end={self.end}",
                field="pattern",
            )


@dataclass(frozen=True)
class ScanConfig:
    schedules: tuple
    steps_per_leg: int = 0
    step: float = 0.0  # step size for the first schedule; alternative to steps_per_leg
    iterations_per_step: int = 1
    initial_state: object = 0.0

    def __post_init__(self):
        scheds = tuple(self.schedules)
        object.__setattr__(self, "schedules", scheds)
        if not scheds:
            raise ValidationError("at least one schedule required", field="schedules")
        names = [s.param for s in scheds]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate schedule parameter", field="schedules")
        if self.step > 0:
            first = scheds[0]
            span = abs(first.end - first.start)
            if span == 0.0:
                raise ValidationError(
                    "step size needs a non-degenerate first schedule; use steps_per_leg",
                    field="step",
                )
            derived = int(round(span / self.step)) + 1
            # both fields set is fine when they agree (replace() re-runs this)
            if self.steps_per_leg not in (0, derived):
                raise ValidationError(
                    "steps_per_leg contradicts step for the first schedule",
                    field="steps_per_leg",
                )
            object.__setattr__(self, "steps_per_leg", derived)
        elif self.steps_per_leg < 1:
            raise ValidationError(
                "give exactly one of steps_per_leg or step", field="steps_per_leg"
            )
        if self.iterations_per_step < 1:
            raise ValidationError("iterations_per_step must be >= 1", field="iterations_per_step")


@dataclass(frozen=True)
class LegTrace:
    params: dict  # swept name -> values at each recorded step
    states: np.ndarray  # (n,) single / (n, 2) two-neuron


@dataclass(frozen=True)
class ScanResult:
    system: str
    schedules: tuple
    steps_per_leg: int
    iterations_per_step: int
    legs: tuple  # (first, second); second is empty after divergence
    error: object = None  # None or {"leg", "step", "message"}

    @property
    def complete(self):
        return self.error is None

    def points(self):
        names = [s.param for s in self.schedules]
        for label, leg in zip(("first", "second"), self.legs):
            n = len(leg.states)
            for i in range(n):
                st = leg.states[i]
                rec = {
                    "leg": label,
                    "step": i,
                    "params": {nm: float(leg.params[nm][i]) for nm in names},
                }
                if self.system == "single":
                    rec["x"] = float(st)
                else:
                    rec["x"] = float(st[0])
                    rec["y"] = float(st[1])
                yield rec


@dataclass(frozen=True)
class Window:
    param_lo: float
    param_hi: float
    max_gap: float


@dataclass(frozen=True)
class HysteresisReport:
    windows: tuple
    tolerance: float


def _full_arrays(names, base_values, config):
    n = config.steps_per_leg
    sched_by_name = {s.param: s for s in config.schedules}
    leg1 = {}
    leg2 = {}
    for nm in names:
        if nm in sched_by_name:
            s = sched_by_name[nm]
            fwd = np.linspace(s.start, s.end, n)
            leg1[nm] = fwd
            leg2[nm] = fwd[::-1].copy()  # bitwise-reversed, so legs align exactly
        else:
            arr = np.full(n, base_values[nm])
            leg1[nm] = arr
            leg2[nm] = arr
    return leg1, leg2


def run_ramp_scan(system, params, config):
    if system == "single":
        if not isinstance(params, SingleNeuronParams):
            raise ValidationError("system 'single' needs SingleNeuronParams")
        names = _SINGLE_NAMES
        base = {"b": params.b, "gamma": params.gamma, "w": params.w}
    elif system == "two":
        if not isinstance(params, TwoNeuronParams):
            raise ValidationError("system 'two' needs TwoNeuronParams")
        names = _TWO_NAMES
        base = {nm: getattr(params, nm) for nm in names}
    else:
        raise ValidationError(f"unknown system {system!r}", field="system")

    for s in config.schedules:
        if s.param not in names:
            raise ValidationError(f"unknown parameter {s.param!r} for system {system}", field="param")
        if s.param == "gamma" and not (0.0 < s.start < 1.0 and 0.0 < s.end < 1.0):
            raise ValidationError("gamma must lie in (0,1)", field="gamma")
        if s.param in ("alpha", "beta") and (s.start <= 0.0 or s.end <= 0.0):
            raise ValidationError(f"{s.param} must stay positive", field=s.param)

    leg1_params, leg2_params = _full_arrays(names, base, config)
    swept = [s.param for s in config.schedules]
    iters = config.iterations_per_step

    def leg_view(arrays, upto=None):
        return {nm: (arrays[nm] if upto is None else arrays[nm][:upto]) for nm in swept}

    if system == "single":
        x0 = _initial_single(config.initial_state)
        xs1, rows1, d1 = kernels.scan_single(
            leg1_params["b"], leg1_params["gamma"], leg1_params["w"], iters, x0
        )
        if d1 >= 0:
            legs = (LegTrace(leg_view(leg1_params, rows1), xs1),
                    LegTrace(leg_view(leg2_params, 0), xs1[:0]))
            err = {"leg": "first", "step": int(d1), "message": "diverged"}
            return ScanResult(system, config.schedules, config.steps_per_leg, iters, legs, err)
        xs2, rows2, d2 = kernels.scan_single(
            leg2_params["b"], leg2_params["gamma"], leg2_params["w"], iters, float(xs1[-1])
        )
        err = None
        if d2 >= 0:
            err = {"leg": "second", "step": int(d2), "message": "diverged"}
            legs = (LegTrace(leg_view(leg1_params), xs1),
                    LegTrace(leg_view(leg2_params, rows2), xs2))
        else:
            legs = (LegTrace(leg_view(leg1_params), xs1),
                    LegTrace(leg_view(leg2_params), xs2))
        return ScanResult(system, config.schedules, config.steps_per_leg, iters, legs, err)

    x0, y0 = _initial_two(config.initial_state)
    order = _TWO_NAMES
    xs1, ys1, rows1, d1 = kernels.scan_two(
        *[leg1_params[nm] for nm in order], iters, x0, y0
    )
    if d1 >= 0:
        legs = (LegTrace(leg_view(leg1_params, rows1), np.stack([xs1, ys1], axis=1)),
                LegTrace(leg_view(leg2_params, 0), np.empty((0, 2))))
        err = {"leg": "first", "step": int(d1), "message": "diverged"}
        return ScanResult(system, config.schedules, config.steps_per_leg, iters, legs, err)
    xs2, ys2, rows2, d2 = kernels.scan_two(
        *[leg2_params[nm] for nm in order], iters, float(xs1[-1]), float(ys1[-1])
    )
    err = None
    upto2 = None
    if d2 >= 0:
        err = {"leg": "second", "step": int(d2), "message": "diverged"}
        upto2 = rows2
    legs = (LegTrace(leg_view(leg1_params), np.stack([xs1, ys1], axis=1)),
            LegTrace(leg_view(leg2_params, upto2), np.stack([xs2, ys2], axis=1)))
    return ScanResult(system, config.schedules, config.steps_per_leg, iters, legs, err)


def _initial_single(s0):
    if isinstance(s0, State2):
        raise ValidationError("single-neuron scan takes a scalar initial state")
    if isinstance(s0, (tuple, list)):
        if len(s0) != 1:
            raise ValidationError("single-neuron scan takes a scalar initial state")
        return float(s0[0])
    return float(s0)


def _initial_two(s0):
    if isinstance(s0, State2):
        return s0.x, s0.y
    if isinstance(s0, (tuple, list)) and len(s0) == 2:
        return float(s0[0]), float(s0[1])
    raise ValidationError("two-neuron scan needs an (x0, y0) initial state")


def _state_matrix(leg):
    st = leg.states
    if st.ndim == 1:
        return st.reshape(-1, 1)
    return st


def detect_hysteresis(scan, tol=0.1):
    """Windows (in the first schedule's parameter) where the two legs disagree.

    Leg 2 runs the schedules backwards, so step i of leg 1 matches step
    n-1-i of leg 2. Periodic orbits make the legs alternate phase at the
    aligned step, which would read as a spurious gap; comparing against
    aligned neighbors i-1, i, i+1 and keeping the minimum suppresses that
    while genuine branch separation survives. Runs shorter than 3 steps
    are discarded as noise.
    """
    if not scan.complete:
        raise ValidationError("cannot detect hysteresis on an incomplete (diverged) scan")
    if tol <= 0.0:
        raise ValidationError("tolerance must be positive", field="tol")
    first, second = scan.legs
    a = _state_matrix(first)
    b = _state_matrix(second)
    n = len(a)
    if n != len(b):
        raise ValidationError("legs have mismatched lengths")
    p1 = first.params[scan.schedules[0].param]

    gaps = np.empty(n)
    for i in range(n):
        j = n - 1 - i
        best = np.inf
        for s in (-1, 0, 1):
            k = j + s
            if 0 <= k < n:
                g = np.max(np.abs(a[i] - b[k]))
                if g < best:
                    best = g
        gaps[i] = best

    flagged = gaps > tol
    windows = []
    i = 0
    while i < n:
        if flagged[i]:
            j = i
            while j + 1 < n and flagged[j + 1]:
                j += 1
            if j - i + 1 >= 3:
                seg = p1[i:j + 1]
                windows.append(Window(float(seg.min()), float(seg.max()), float(gaps[i:j + 1].max())))
            i = j + 1
        else:
            i += 1
    windows.sort(key=lambda w: w.param_lo)
    return HysteresisReport(tuple(windows), tol)


def oscillation_windows(scan, leg="first", tol=0.2, min_run=3):
    """Parameter windows where consecutive recorded states within one leg
    keep jumping by more than tol (period-2 and larger structure riding the
    ramp). Complements detect_hysteresis, which compares across legs."""
    idx = 0 if leg == "first" else 1
    trace = scan.legs[idx]
    a = _state_matrix(trace)
    n = len(a)
    if n < 2:
        return ()
    p1 = trace.params[scan.schedules[0].param]
    jump = np.max(np.abs(a[1:] - a[:-1]), axis=1)
    flagged = jump > tol  # flag the step after the jump
    windows = []
    i = 0
    while i < n - 1:
        if flagged[i]:
            j = i
            while j + 1 < n - 1 and flagged[j + 1]:
                j += 1
            if j - i + 1 >= min_run:
                seg = p1[i:j + 2]
                windows.append(Window(float(seg.min()), float(seg.max()), float(jump[i:j + 1].max())))
            i = j + 1
        else:
            i += 1
    return tuple(windows)
