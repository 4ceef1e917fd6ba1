"""Scenario files: a JSON description of one curve, scan, or classify job.

Validation is strict on purpose. A typo'd key or a string where a number
belongs fails loudly with the offending field named, instead of silently
running something else. Parameters that a task treats as outputs (b and w
for single-neuron curves, b1 and w12 for two-neuron curves) may be omitted
and default to zero.
"""

import dataclasses
import json
import os
from dataclasses import dataclass

from .bifurcation import RampSchedule, ScanConfig, detect_hysteresis, run_ramp_scan
from .errors import ValidationError
from .maps import SingleNeuronParams, TwoNeuronParams

TASKS = ("curve", "scan", "classify")
FORMATS = ("csv", "json", "svg")
SINGLE_BRANCHES = ("B_plus", "B_minus")
TWO_KINDS = ("fold", "flip", "neimark_sacker")

_MISSING = object()


@dataclass(frozen=True)
class CurveConfig:
    kinds: tuple
    x_min: float = -8.0
    x_max: float = 8.0
    n: int = 2001


@dataclass(frozen=True)
class ClassifyConfig:
    initial_state: object  # float (single) or (x, y) tuple (two)
    transient: int = 1000
    n: int = 4096


@dataclass(frozen=True)
class Output:
    format: str
    path: str


@dataclass(frozen=True)
class Scenario:
    id: str
    description: str
    system: str
    task: str
    params: object  # SingleNeuronParams or TwoNeuronParams
    scan: object = None
    classify: object = None
    curve: object = None
    outputs: tuple = ()
    hysteresis_tol: float = 0.1


def _check_keys(d, allowed, where):
    for k in d:
        if k not in allowed:
            raise ValidationError(f"unknown key {k!r} in {where}", field=k)


def _num(d, key, where, default=_MISSING):
    v = d.get(key, _MISSING)
    if v is _MISSING:
        if default is _MISSING:
            raise ValidationError(f"{where} is missing {key!r}", field=key)
        return default
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"{where}.{key} must be a number", field=key)
    return float(v)


def _intval(d, key, where, default=_MISSING):
    v = d.get(key, _MISSING)
    if v is _MISSING:
        if default is _MISSING:
            raise ValidationError(f"{where} is missing {key!r}", field=key)
        return default
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValidationError(f"{where}.{key} must be an integer", field=key)
    return v


def _text(d, key, where, default=_MISSING):
    v = d.get(key, _MISSING)
    if v is _MISSING:
        if default is _MISSING:
            raise ValidationError(f"{where} is missing {key!r}", field=key)
        return default
    if not isinstance(v, str):
        raise ValidationError(f"{where}.{key} must be a string", field=key)
    return v


def _params_from_dict(system, d):
    if not isinstance(d, dict):
        raise ValidationError("params must be an object", field="params")
    if system == "single":
        _check_keys(d, {"b", "gamma", "w"}, "params")
        return SingleNeuronParams(
            b=_num(d, "b", "params", 0.0),
            gamma=_num(d, "gamma", "params"),
            w=_num(d, "w", "params", 0.0),
        )
    _check_keys(d, {"b1", "b2", "w11", "w12", "w21", "w22", "alpha", "beta"}, "params")
    return TwoNeuronParams(
        b1=_num(d, "b1", "params", 0.0),
        b2=_num(d, "b2", "params"),
        w11=_num(d, "w11", "params"),
        w12=_num(d, "w12", "params", 0.0),
        w21=_num(d, "w21", "params"),
        w22=_num(d, "w22", "params", 0.0),
        alpha=_num(d, "alpha", "params", 1.0),
        beta=_num(d, "beta", "params", 0.3),
    )


def _initial_from_list(system, v, where):
    if not isinstance(v, list) or any(
        isinstance(e, bool) or not isinstance(e, (int, float)) for e in v
    ):
        raise ValidationError(f"{where}.initial_state must be a list of numbers", field="initial_state")
    if system == "single":
        if len(v) != 1:
            raise ValidationError(f"{where}.initial_state needs exactly one value", field="initial_state")
        return float(v[0])
    if len(v) != 2:
        raise ValidationError(f"{where}.initial_state needs exactly two values", field="initial_state")
    return (float(v[0]), float(v[1]))


def _scan_from_dict(system, d):
    _check_keys(d, {"schedules", "step", "steps_per_leg", "iterations_per_step", "initial_state"}, "scan")
    raw = d.get("schedules")
    if not isinstance(raw, list) or not raw:
        raise ValidationError("scan.schedules must be a non-empty list", field="schedules")
    schedules = []
    for i, sd in enumerate(raw):
        where = f"scan.schedules[{i}]"
        if not isinstance(sd, dict):
            raise ValidationError(f"{where} must be an object", field="schedules")
        _check_keys(sd, {"param", "start", "end", "pattern"}, where)
        schedules.append(
            RampSchedule(
                _text(sd, "param", where),
                _num(sd, "start", where),
                _num(sd, "end", where),
                _text(sd, "pattern", where, ""),
            )
        )
    if "initial_state" not in d:
        raise ValidationError("scan is missing 'initial_state'", field="initial_state")
    init = _initial_from_list(system, d["initial_state"], "scan")
    return ScanConfig(
        schedules=tuple(schedules),
        steps_per_leg=_intval(d, "steps_per_leg", "scan", 0),
        step=_num(d, "step", "scan", 0.0),
        iterations_per_step=_intval(d, "iterations_per_step", "scan", 1),
        initial_state=init,
    )


def _classify_from_dict(system, d):
    _check_keys(d, {"initial_state", "transient", "n"}, "classify")
    if "initial_state" not in d:
        raise ValidationError("classify is missing 'initial_state'", field="initial_state")
    return ClassifyConfig(
        initial_state=_initial_from_list(system, d["initial_state"], "classify"),
        transient=_intval(d, "transient", "classify", 1000),
        n=_intval(d, "n", "classify", 4096),
    )


def _curve_from_dict(system, d):
    _check_keys(d, {"kinds", "x_min", "x_max", "n"}, "curve")
    vocab = SINGLE_BRANCHES if system == "single" else TWO_KINDS
    kinds = d.get("kinds", list(vocab))
    if not isinstance(kinds, list) or not kinds:
        raise ValidationError("curve.kinds must be a non-empty list", field="kinds")
    for k in kinds:
        if k not in vocab:
            raise ValidationError(f"curve.kinds entry {k!r} is not one of {vocab}", field="kinds")
    x_min = _num(d, "x_min", "curve", -8.0)
    x_max = _num(d, "x_max", "curve", 8.0)
    if not x_min < x_max:
        raise ValidationError("curve needs x_min < x_max", field="x_min")
    n = _intval(d, "n", "curve", 2001)
    if n < 2:
        raise ValidationError("curve.n must be >= 2", field="n")
    return CurveConfig(tuple(kinds), x_min, x_max, n)


def _outputs_from_list(raw):
    if not isinstance(raw, list):
        raise ValidationError("outputs must be a list", field="outputs")
    outs = []
    for i, od in enumerate(raw):
        where = f"outputs[{i}]"
        if not isinstance(od, dict):
            raise ValidationError(f"{where} must be an object", field="outputs")
        _check_keys(od, {"format", "path"}, where)
        fmt = _text(od, "format", where)
        if fmt not in FORMATS:
            raise ValidationError(f"{where}.format must be one of {FORMATS}", field="format")
        outs.append(Output(fmt, _text(od, "path", where)))
    return tuple(outs)


def scenario_from_dict(d):
    if not isinstance(d, dict):
        raise ValidationError("scenario must be a JSON object")
    _check_keys(
        d,
        {"id", "description", "system", "task", "params",
         "scan", "classify", "curve", "outputs", "hysteresis_tol"},
        "scenario",
    )
    system = _text(d, "system", "scenario")
    if system not in ("single", "two"):
        raise ValidationError(f"system must be 'single' or 'two', got {system!r}", field="system")
    task = _text(d, "task", "scenario")
    if task not in TASKS:
        raise ValidationError(f"task must be one of {TASKS}, got {task!r}", field="task")
    if "params" not in d:
        raise ValidationError("scenario is missing 'params'", field="params")
    params = _params_from_dict(system, d["params"])

    for section in TASKS:
        if section != task and section in d:
            raise ValidationError(f"section {section!r} does not belong in a {task} scenario", field=section)
    body = d.get(task)
    scan = classify = curve = None
    if task == "curve":
        curve = _curve_from_dict(system, body if body is not None else {})
    elif task == "scan":
        if not isinstance(body, dict):
            raise ValidationError("scan scenario needs a 'scan' object", field="scan")
        scan = _scan_from_dict(system, body)
    else:
        if not isinstance(body, dict):
            raise ValidationError("classify scenario needs a 'classify' object", field="classify")
        classify = _classify_from_dict(system, body)

    tol = _num(d, "hysteresis_tol", "scenario", 0.1)
    if tol <= 0.0:
        raise ValidationError("hysteresis_tol must be positive", field="hysteresis_tol")

    return Scenario(
        id=_text(d, "id", "scenario", ""),
        description=_text(d, "description", "scenario", ""),
        system=system,
        task=task,
        params=params,
        scan=scan,
        classify=classify,
        curve=curve,
        outputs=_outputs_from_list(d.get("outputs", [])),
        hysteresis_tol=tol,
    )


def _params_to_dict(system, p):
    if system == "single":
        return {"b": p.b, "gamma": p.gamma, "w": p.w}
    return {
        "b1": p.b1, "b2": p.b2, "w11": p.w11, "w12": p.w12,
        "w21": p.w21, "w22": p.w22, "alpha": p.alpha, "beta": p.beta,
    }


def _initial_to_list(init):
    if isinstance(init, tuple):
        return [init[0], init[1]]
    return [init]


def scenario_to_dict(sc):
    d = {
        "id": sc.id,
        "description": sc.description,
        "system": sc.system,
        "task": sc.task,
        "params": _params_to_dict(sc.system, sc.params),
    }
    if sc.task == "curve":
        d["curve"] = {
            "kinds": list(sc.curve.kinds),
            "x_min": sc.curve.x_min,
            "x_max": sc.curve.x_max,
            "n": sc.curve.n,
        }
    elif sc.task == "scan":
        cfg = sc.scan
        body = {
            "schedules": [
                {"param": s.param, "start": s.start, "end": s.end, "pattern": s.pattern}
                for s in cfg.schedules
            ],
            "iterations_per_step": cfg.iterations_per_step,
            "initial_state": _initial_to_list(cfg.initial_state),
        }
        if cfg.step > 0:
            body["step"] = cfg.step
        else:
            body["steps_per_leg"] = cfg.steps_per_leg
        d["scan"] = body
    else:
        d["classify"] = {
            "initial_state": _initial_to_list(sc.classify.initial_state),
            "transient": sc.classify.transient,
            "n": sc.classify.n,
        }
    if sc.outputs:
        d["outputs"] = [{"format": o.format, "path": o.path} for o in sc.outputs]
    d["hysteresis_tol"] = sc.hysteresis_tol
    return d


def load_scenario(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    return scenario_from_dict(data)


def save_scenario(sc, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(sc), fh, indent=2)
        fh.write("\n")


def with_overrides(sc, step=None, initial_state=None, iterations_per_step=None):
    """A copy of a scan scenario with CLI-style overrides applied."""
    if sc.task != "scan":
        raise ValidationError("overrides apply to scan scenarios only")
    cfg = sc.scan
    kwargs = {}
    if step is not None:
        kwargs["step"] = step
        kwargs["steps_per_leg"] = 0
    if initial_state is not None:
        kwargs["initial_state"] = _initial_from_list(sc.system, list(initial_state), "override")
    if iterations_per_step is not None:
        kwargs["iterations_per_step"] = iterations_per_step
    return dataclasses.replace(sc, scan=dataclasses.replace(cfg, **kwargs))


def outputs_for(sc, out_dir, formats):
    """Standard output set for a scenario: <out_dir>/<id>.<format>."""
    stem = sc.id or sc.task
    return tuple(Output(fmt, os.path.join(out_dir, f"{stem}.{fmt}")) for fmt in formats)


def scenario_curves(sc):
    from .stability_curves import default_grid, single_neuron_boundary, two_neuron_boundary

    grid = default_grid(sc.curve.n, sc.curve.x_min, sc.curve.x_max)
    p = sc.params
    curves = []
    for k in sc.curve.kinds:
        if sc.system == "single":
            curves.append(single_neuron_boundary(p.gamma, k, grid))
        else:
            curves.append(two_neuron_boundary(k, p.w11, p.b2, p.w21, p.alpha, p.beta, grid))
    return curves


def _hysteresis_payload(report):
    return {
        "tolerance": report.tolerance,
        "windows": [
            {"param_lo": w.param_lo, "param_hi": w.param_hi, "max_gap": w.max_gap}
            for w in report.windows
        ],
    }


def run_scenario(sc, outputs=None):
    """Execute a scenario's task and write the requested outputs.

    Returns the list of written paths. On failure nothing is left behind:
    already-written files from this invocation are removed before the error
    propagates.
    """
    from . import output as writers
    from .errors import DivergenceError
    from .spectrum import classify_orbit

    outs = tuple(outputs) if outputs is not None else sc.outputs
    written = []
    try:
        if sc.task == "curve":
            curves = scenario_curves(sc)
            for o in outs:
                if o.format == "csv":
                    writers.write_curves_csv(o.path, curves)
                elif o.format == "svg":
                    writers.write_curves_svg(o.path, curves, title=sc.id or "curves")
                else:
                    payload = [
                        {
                            "kind": writers.curve_label(c),
                            "plane": list(c.plane),
                            "x": [s.x for s in c.samples],
                            c.plane[0]: [s.point[0] for s in c.samples],
                            c.plane[1]: [s.point[1] for s in c.samples],
                        }
                        for c in curves
                    ]
                    _write_json(o.path, payload)
                written.append(o.path)
        elif sc.task == "scan":
            result = run_ramp_scan(sc.system, sc.params, sc.scan)
            if not result.complete:
                raise DivergenceError(result.error["step"])
            report = detect_hysteresis(result, sc.hysteresis_tol)
            for o in outs:
                if o.format == "csv":
                    writers.write_scan_csv(o.path, result)
                elif o.format == "svg":
                    writers.write_scan_svg(o.path, result, title=sc.id or "scan")
                else:
                    _write_json(o.path, _hysteresis_payload(report))
                written.append(o.path)
        else:
            cfg = sc.classify
            result = classify_orbit(sc.params, cfg.initial_state, cfg.transient, cfg.n)
            for o in outs:
                if o.format == "csv":
                    writers.write_spectrum_csv(o.path, result.frequencies, result.power)
                elif o.format == "svg":
                    writers.write_spectrum_svg(o.path, result.frequencies, result.power)
                else:
                    _write_json(
                        o.path,
                        {
                            "classification": result.label(),
                            "confidence": result.confidence,
                            "dominant_peaks": [list(p) for p in result.dominant_peaks],
                        },
                    )
                written.append(o.path)
    except Exception:
        for path in written:
            try:
                os.remove(path)
            except OSError:
                pass
        raise
    return written


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
