import dataclasses
import math

import numpy as np
import pytest

from neuromod.bifurcation import (
    DOWN_THEN_UP,
    UP_THEN_DOWN,
    RampSchedule,
    ScanConfig,
    detect_hysteresis,
    oscillation_windows,
    run_ramp_scan,
)
from neuromod.errors import ValidationError
from neuromod.maps import SingleNeuronParams, TwoNeuronParams
from neuromod.presets import preset

FOLD_LO = -1.7075493764025978  # B_plus bias at sigma' = 1/6, x > 0 solution
FOLD_HI = -1.2924506235974022


def _single_cfg(**kw):
    base = dict(
        schedules=(RampSchedule("b", -5.0, 0.0),), step=0.01,
        iterations_per_step=1, initial_state=-10.0,
    )
    base.update(kw)
    return ScanConfig(**base)


def test_schedule_pattern_inference():
    assert RampSchedule("b", -5.0, 0.0).pattern == UP_THEN_DOWN
    assert RampSchedule("b", 3.0, -2.0).pattern == DOWN_THEN_UP
    assert RampSchedule("b", 1.0, 1.0).pattern == UP_THEN_DOWN
    with pytest.raises(ValidationError, match="pattern"):
        RampSchedule("b", -5.0, 0.0, pattern=DOWN_THEN_UP)
    with pytest.raises(ValidationError, match="pattern"):
        RampSchedule("b", 0.0, 1.0, pattern="zigzag")


def test_scan_config_validation():
    with pytest.raises(ValidationError):
        ScanConfig(schedules=())
    with pytest.raises(ValidationError, match="duplicate"):
        ScanConfig(
            schedules=(RampSchedule("b", 0, 1), RampSchedule("b", 1, 2)), step=0.1
        )
    with pytest.raises(ValidationError, match="steps_per_leg"):
        ScanConfig(schedules=(RampSchedule("b", 0, 1),))
    with pytest.raises(ValidationError, match="step"):
        ScanConfig(schedules=(RampSchedule("b", 1, 1),), step=0.1)
    with pytest.raises(ValidationError, match="iterations"):
        ScanConfig(schedules=(RampSchedule("b", 0, 1),), step=0.1, iterations_per_step=0)
    cfg = ScanConfig(schedules=(RampSchedule("b", -5.0, 0.0),), step=0.01)
    assert cfg.steps_per_leg == 501
    # replace() must survive its own derived steps_per_leg
    cfg2 = dataclasses.replace(cfg, iterations_per_step=64)
    assert cfg2.steps_per_leg == 501
    with pytest.raises(ValidationError, match="contradicts"):
        ScanConfig(schedules=(RampSchedule("b", -5.0, 0.0),), step=0.01, steps_per_leg=100)


def test_unknown_and_constrained_schedule_params():
    p = SingleNeuronParams(b=0.0, gamma=0.5, w=1.0)
    with pytest.raises(ValidationError, match="w12"):
        run_ramp_scan("single", p, _single_cfg(schedules=(RampSchedule("w12", 0, 1),)))
    with pytest.raises(ValidationError, match="gamma"):
        run_ramp_scan("single", p, _single_cfg(schedules=(RampSchedule("gamma", 0.5, 1.5),)))
    q = TwoNeuronParams(b1=0.0, b2=0.0, w11=0.0, w12=1.0, w21=1.0)
    with pytest.raises(ValidationError, match="alpha"):
        run_ramp_scan("two", q, ScanConfig(
            schedules=(RampSchedule("alpha", 1.0, -1.0),), steps_per_leg=10,
            initial_state=(0.0, 0.0),
        ))
    with pytest.raises(ValidationError, match="system"):
        run_ramp_scan("three", p, _single_cfg())


def test_initial_state_forms():
    p = SingleNeuronParams(b=1.0, gamma=0.5, w=0.0)
    a = run_ramp_scan("single", p, _single_cfg(initial_state=-10.0))
    b = run_ramp_scan("single", p, _single_cfg(initial_state=[-10.0]))
    assert np.array_equal(a.legs[0].states, b.legs[0].states)
    with pytest.raises(ValidationError):
        run_ramp_scan("single", p, _single_cfg(initial_state=(1.0, 2.0)))
    q = TwoNeuronParams(b1=0.0, b2=0.0, w11=0.0, w12=1.0, w21=1.0)
    with pytest.raises(ValidationError):
        run_ramp_scan("two", q, ScanConfig(
            schedules=(RampSchedule("b1", 0, 1),), steps_per_leg=5, initial_state=0.0
        ))


def test_degenerate_schedule_converges():
    p = SingleNeuronParams(b=1.0, gamma=0.5, w=0.0)
    cfg = ScanConfig(schedules=(RampSchedule("b", 1.0, 1.0),), steps_per_leg=100,
                     initial_state=0.0)
    res = run_ramp_scan("single", p, cfg)
    assert res.complete
    xs = res.legs[0].states
    assert abs(xs[49] - 2.0) < 1e-6
    assert abs(xs[-1] - 2.0) < 1e-12
    assert detect_hysteresis(res, 0.5).windows == ()


def test_scan_is_deterministic():
    sc = preset("7a")
    a = run_ramp_scan(sc.system, sc.params, sc.scan)
    b = run_ramp_scan(sc.system, sc.params, sc.scan)
    for la, lb in zip(a.legs, b.legs):
        assert np.array_equal(la.states, lb.states)


def test_second_leg_parameters_reverse_first():
    sc = preset("2b")  # two schedules walked in lockstep
    res = run_ramp_scan(sc.system, sc.params, sc.scan)
    for name in ("b", "w"):
        p1 = res.legs[0].params[name]
        p2 = res.legs[1].params[name]
        assert np.array_equal(p1[::-1], p2)


def test_state_carries_across_turning_point():
    sc = preset("2a")
    res = run_ramp_scan(sc.system, sc.params, sc.scan)
    # leg 2 starts from leg 1's final state, not from x0; at b = 0 the high
    # branch is the only attractor, so the first leg-2 state stays high
    assert res.legs[1].states[0] > 0.0
    assert res.legs[0].states[0] < -9.0


def test_points_structure():
    sc = preset("2a")
    res = run_ramp_scan(sc.system, sc.params, sc.scan)
    pts = list(res.points())
    assert len(pts) == 2 * 501
    first = pts[0]
    assert first["leg"] == "first" and first["step"] == 0
    assert set(first["params"]) == {"b"}
    assert "x" in first and "y" not in first
    assert pts[501]["leg"] == "second"
    two = preset("7a")
    res2 = run_ramp_scan(two.system, two.params, two.scan)
    pt = next(res2.points())
    assert set(pt["params"]) == {"b1"}
    assert "y" in pt


def test_contracting_scan_has_no_windows():
    p = SingleNeuronParams(b=-5.0, gamma=0.5, w=0.0)
    res = run_ramp_scan("single", p, _single_cfg())
    assert detect_hysteresis(res, 0.1).windows == ()


def test_fig2a_window_rough_at_one_iteration():
    sc = preset("2a")
    rep = detect_hysteresis(run_ramp_scan(sc.system, sc.params, sc.scan), 0.5)
    assert len(rep.windows) == 1
    w = rep.windows[0]
    # one application per step lags the attractor, so endpoints drift wide
    assert abs(w.param_lo - FOLD_LO) < 0.3
    assert abs(w.param_hi - FOLD_HI) < 0.3
    assert w.max_gap > 1.0


def test_fig2a_window_tightens_with_settling():
    sc = preset("2a")
    cfg = dataclasses.replace(sc.scan, iterations_per_step=64)
    rep = detect_hysteresis(run_ramp_scan(sc.system, sc.params, cfg), 0.5)
    assert len(rep.windows) == 1
    w = rep.windows[0]
    assert abs(w.param_lo - FOLD_LO) < 0.05
    assert abs(w.param_hi - FOLD_HI) < 0.05


def test_window_growth_bounded_under_step_halving():
    sc = preset("2a")
    h = 0.01
    for iters in (1, 64):
        coarse_cfg = dataclasses.replace(sc.scan, iterations_per_step=iters)
        fine_cfg = ScanConfig(schedules=sc.scan.schedules, step=h / 2,
                              iterations_per_step=iters,
                              initial_state=sc.scan.initial_state)
        wc = detect_hysteresis(run_ramp_scan(sc.system, sc.params, coarse_cfg), 0.5).windows
        wf = detect_hysteresis(run_ramp_scan(sc.system, sc.params, fine_cfg), 0.5).windows
        assert len(wc) == len(wf) == 1
        grow_lo = wc[0].param_lo - wf[0].param_lo
        grow_hi = wf[0].param_hi - wc[0].param_hi
        assert grow_lo <= 2 * h + 1e-9
        assert grow_hi <= 2 * h + 1e-9


def test_history_dependence_between_3a_and_3b():
    a = preset("3a")
    b = preset("3b")
    ra = run_ramp_scan(a.system, a.params, a.scan)
    rb = run_ramp_scan(b.system, b.params, b.scan)
    bs = ra.legs[0].params["b"]
    sel = (bs > -5.0) & (bs < -1.0)
    diff = np.abs(ra.legs[0].states - rb.legs[0].states)[sel]
    assert diff.max() > 1.0


def test_fig13_depends_on_initial_state():
    sc = preset("13")
    rep = detect_hysteresis(run_ramp_scan(sc.system, sc.params, sc.scan), 0.5)
    assert len(rep.windows) == 1
    assert rep.windows[0].param_hi == 10.0  # open window, runs to the ramp end
    cold = dataclasses.replace(sc.scan, initial_state=(-7.0, -7.0))
    rep2 = detect_hysteresis(run_ramp_scan(sc.system, sc.params, cold), 0.5)
    assert rep2.windows == ()


def test_windows_sorted_nonoverlapping():
    sc = preset("12b")
    rep = detect_hysteresis(run_ramp_scan(sc.system, sc.params, sc.scan), 0.2)
    los = [w.param_lo for w in rep.windows]
    assert los == sorted(los)
    for a, b in zip(rep.windows, rep.windows[1:]):
        assert a.param_hi < b.param_lo


def test_divergence_yields_partial_result():
    p = SingleNeuronParams(b=0.0, gamma=0.5, w=3e12)
    res = run_ramp_scan("single", p, _single_cfg(schedules=(RampSchedule("b", 0.0, 1.0),),
                                                 step=0.1, initial_state=0.0))
    assert not res.complete
    assert res.error["leg"] == "first"
    assert res.error["step"] >= 1
    with pytest.raises(ValidationError, match="incomplete"):
        detect_hysteresis(res)


def test_detect_hysteresis_tolerance_validation():
    sc = preset("2a")
    res = run_ramp_scan(sc.system, sc.params, sc.scan)
    with pytest.raises(ValidationError, match="tol"):
        detect_hysteresis(res, 0.0)


def test_oscillation_windows_quiet_scan():
    p = SingleNeuronParams(b=-5.0, gamma=0.5, w=0.0)
    res = run_ramp_scan("single", p, _single_cfg())
    assert oscillation_windows(res, tol=0.05) == ()


def test_oscillation_windows_pick_up_period2():
    sc = preset("7b")
    res = run_ramp_scan(sc.system, sc.params, sc.scan)
    wins = oscillation_windows(res, leg="first", tol=0.2)
    assert len(wins) == 1
    w = wins[0]
    assert w.param_lo < 0.0 < w.param_hi
    assert w.max_gap > 1.0
