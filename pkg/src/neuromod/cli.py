"""Command-line entry points.

Exit codes: 0 success, 2 validation problem (bad arguments, bad scenario,
bad parameter values), 3 divergence while iterating, 4 I/O failure.
"""

import argparse
import os
import sys

from .errors import DivergenceError, ValidationError
from .output import write_curves_csv, write_spectrum_csv, write_spectrum_svg
from .presets import preset, preset_listing
from .scenario import (
    _write_json,
    load_scenario,
    outputs_for,
    run_scenario,
    with_overrides,
)
from .spectrum import classify_orbit
from .stability_curves import (
    B_MINUS,
    B_PLUS,
    NS,
    FLIP,
    FOLD,
    default_grid,
    single_neuron_boundary,
    two_neuron_boundary,
)

_KIND_ALIASES = {"fold": FOLD, "flip": FLIP, "ns": NS, "neimark_sacker": NS}


def _parse_formats(text):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    for p in parts:
        if p not in ("csv", "svg", "json"):
            raise ValidationError(f"unknown format {p!r}", field="formats")
    if not parts:
        raise ValidationError("no output formats given", field="formats")
    return tuple(parts)


def _parse_init(text):
    try:
        return [float(p) for p in text.split(",")]
    except ValueError:
        raise ValidationError(f"cannot parse initial state {text!r}", field="init") from None


def _apply_scan_overrides(sc, args):
    if args.step is None and args.init is None and args.iters_per_step is None:
        return sc
    if sc.task != "scan":
        raise ValidationError("scan overrides do not apply to this scenario task")
    return with_overrides(
        sc,
        step=args.step,
        initial_state=_parse_init(args.init) if args.init is not None else None,
        iterations_per_step=args.iters_per_step,
    )


def cmd_figure(args):
    sc = _apply_scan_overrides(preset(args.id), args)
    formats = _parse_formats(args.formats)
    os.makedirs(args.out, exist_ok=True)
    run_scenario(sc, outputs_for(sc, args.out, formats))
    return 0


def cmd_curve(args):
    if args.xmin >= args.xmax:
        raise ValidationError("xmin must be less than xmax", field="xmin")
    if args.n < 2:
        raise ValidationError("n must be >= 2", field="n")
    grid = default_grid(args.n, args.xmin, args.xmax)
    if args.system == "single":
        if args.branch is None:
            raise ValidationError("single-neuron curves need --branch", field="branch")
        if args.gamma is None:
            raise ValidationError("single-neuron curves need --gamma", field="gamma")
        curve = single_neuron_boundary(args.gamma, args.branch, grid)
    else:
        if args.kind is None:
            raise ValidationError("two-neuron curves need --kind", field="kind")
        kind = _KIND_ALIASES[args.kind]
        curve = two_neuron_boundary(
            kind, args.w11, args.b2, args.w21, args.alpha, args.beta, grid
        )
    write_curves_csv(args.out, [curve])
    return 0


def cmd_scan(args):
    sc = load_scenario(args.scenario)
    if sc.task != "scan":
        raise ValidationError(f"scenario {sc.id or args.scenario!r} is not a scan scenario")
    sc = _apply_scan_overrides(sc, args)
    formats = _parse_formats(args.formats)
    os.makedirs(args.out, exist_ok=True)
    run_scenario(sc, outputs_for(sc, args.out, formats))
    return 0


def cmd_classify(args):
    sc = load_scenario(args.scenario)
    if sc.task != "classify":
        raise ValidationError(f"scenario {sc.id or args.scenario!r} is not a classify scenario")
    cfg = sc.classify
    init = cfg.initial_state
    if args.init is not None:
        vals = _parse_init(args.init)
        if sc.system == "single":
            if len(vals) != 1:
                raise ValidationError("single-neuron init takes one value", field="init")
            init = vals[0]
        else:
            if len(vals) != 2:
                raise ValidationError("two-neuron init takes two values", field="init")
            init = (vals[0], vals[1])
    result = classify_orbit(sc.params, init, cfg.transient, cfg.n)
    print(f"classification: {result.label()}")
    print(f"confidence: {result.confidence:.6f}")
    if result.dominant_peaks:
        print("dominant peaks (frequency, power):")
        for f, p in result.dominant_peaks[:5]:
            print(f"  {f:.6f}  {p:.6g}")
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        stem = sc.id or "spectrum"
        write_spectrum_csv(os.path.join(args.out, f"{stem}.csv"), result.frequencies, result.power)
        write_spectrum_svg(os.path.join(args.out, f"{stem}.svg"), result.frequencies, result.power)
        _write_json(
            os.path.join(args.out, f"{stem}.json"),
            {
                "classification": result.label(),
                "confidence": result.confidence,
                "dominant_peaks": [list(p) for p in result.dominant_peaks],
            },
        )
    return 0


def cmd_presets(args):
    for row in preset_listing():
        print(f"{row['id']:10s} {row['description']}")
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="neuromod",
        description="Stability curves, bifurcation scans, and orbit classification "
        "for one- and two-neuron discrete maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="render a preset figure to CSV/SVG/JSON")
    p.add_argument("id", help="figure id, e.g. 1, 2a, 7b, 13")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--formats", default="csv,svg,json")
    p.add_argument("--step", type=float, default=None, help="override schedule step size")
    p.add_argument("--init", default=None, help="override initial state, e.g. --init=-7,-2")
    p.add_argument("--iters-per-step", type=int, default=None, dest="iters_per_step")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("curve", help="write one stability boundary curve as CSV")
    p.add_argument("--system", required=True, choices=("single", "two"))
    p.add_argument("--branch", choices=(B_PLUS, B_MINUS), default=None)
    p.add_argument("--kind", choices=tuple(_KIND_ALIASES), default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--w11", type=float, default=0.0)
    p.add_argument("--b2", type=float, default=0.0)
    p.add_argument("--w21", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.3)
    p.add_argument("--xmin", type=float, default=-8.0)
    p.add_argument("--xmax", type=float, default=8.0)
    p.add_argument("--n", type=int, default=2001)
    p.add_argument("--out", required=True, help="output CSV file")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("scan", help="run a scan scenario, write CSV/SVG and a hysteresis report")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--formats", default="csv,svg,json")
    p.add_argument("--step", type=float, default=None, help="override schedule step size")
    p.add_argument("--init", default=None, help="override initial state, e.g. --init=-7,-2")
    p.add_argument("--iters-per-step", type=int, default=None, dest="iters_per_step")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classify", help="classify the asymptotic orbit of a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--init", default=None, help="override initial state")
    p.add_argument("--out", default=None, help="also write spectrum CSV/SVG/JSON here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("presets", help="list the figure presets")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("serve", help="serve the HTTP API (and the explorer UI if built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
