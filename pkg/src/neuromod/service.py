"""Local HTTP JSON API over the same code paths the CLI uses.

Error model: malformed or missing fields give 400 with the offending field
named; w21 = 0 is a well-formed request for curves that do not exist, which
gives 422; oversized scans give 413; divergence during iteration gives 500.
The service is stateless; every request runs to completion inside the
handler.
"""

import os
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .bifurcation import detect_hysteresis, run_ramp_scan
from .errors import DivergenceError, ValidationError
from .presets import preset_listing
from .scenario import scenario_from_dict
from .stability_curves import (
    B_MINUS,
    B_PLUS,
    FLIP,
    FOLD,
    NS,
    default_grid,
    single_neuron_boundary,
    two_neuron_boundary,
)

MAX_CURVE_SAMPLES = 20000
MAX_RECORDED_STEPS = 200000
MAX_ITERATIONS_PER_STEP = 1000


def _curve_payload(curve):
    p0, p1 = curve.plane
    return {
        "x": [s.x for s in curve.samples],
        p0: [s.point[0] for s in curve.samples],
        p1: [s.point[1] for s in curve.samples],
    }


def _require(name, value):
    if value is None:
        raise ValidationError(f"missing query parameter {name!r}", field=name)
    return value


def create_app():
    app = FastAPI(title="neuromod", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _on_request_validation(request, exc):
        detail = [
            {"field": str(err["loc"][-1]), "message": err["msg"]} for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.exception_handler(ValidationError)
    async def _on_validation(request, exc):
        status = 422 if exc.field == "w21" else 400
        return JSONResponse(
            status_code=status,
            content={"detail": [{"field": exc.field, "message": str(exc)}]},
        )

    @app.exception_handler(DivergenceError)
    async def _on_divergence(request, exc):
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/api/presets")
    def api_presets():
        return preset_listing()

    @app.get("/api/curves")
    def api_curves(
        system: str = "two",
        gamma: float = None,
        alpha: float = None,
        beta: float = None,
        b2: float = None,
        w11: float = None,
        w21: float = None,
        xmin: float = -8.0,
        xmax: float = 8.0,
        n: int = 2001,
    ):
        if system not in ("single", "two"):
            raise ValidationError(f"system must be 'single' or 'two', got {system!r}", field="system")
        if not xmin < xmax:
            raise ValidationError("xmin must be less than xmax", field="xmin")
        if not 2 <= n <= MAX_CURVE_SAMPLES:
            raise ValidationError(f"n must be in [2, {MAX_CURVE_SAMPLES}]", field="n")
        grid = default_grid(n, xmin, xmax)
        if system == "single":
            g = _require("gamma", gamma)
            return {
                "B_plus": _curve_payload(single_neuron_boundary(g, B_PLUS, grid)),
                "B_minus": _curve_payload(single_neuron_boundary(g, B_MINUS, grid)),
            }
        args = (
            _require("w11", w11),
            _require("b2", b2),
            _require("w21", w21),
            _require("alpha", alpha),
            _require("beta", beta),
        )
        return {
            "fold": _curve_payload(two_neuron_boundary(FOLD, *args, grid)),
            "flip": _curve_payload(two_neuron_boundary(FLIP, *args, grid)),
            "ns": _curve_payload(two_neuron_boundary(NS, *args, grid)),
        }

    @app.post("/api/scan")
    def api_scan(payload: dict = Body(...)):
        body = dict(payload)
        body.setdefault("task", "scan")
        if body["task"] != "scan":
            raise ValidationError("this endpoint runs scan scenarios only", field="task")
        sc = scenario_from_dict(body)
        if 2 * sc.scan.steps_per_leg > MAX_RECORDED_STEPS:
            raise HTTPException(
                status_code=413,
                detail=f"scan would record {2 * sc.scan.steps_per_leg} steps; "
                f"the limit is {MAX_RECORDED_STEPS} (coarsen the step size)",
            )
        if sc.scan.iterations_per_step > MAX_ITERATIONS_PER_STEP:
            raise ValidationError(
                f"iterations_per_step is limited to {MAX_ITERATIONS_PER_STEP}",
                field="iterations_per_step",
            )
        result = run_ramp_scan(sc.system, sc.params, sc.scan)
        if not result.complete:
            raise DivergenceError(result.error["step"])
        report = detect_hysteresis(result, sc.hysteresis_tol)
        return {
            "points": list(result.points()),
            "hysteresis": {
                "tolerance": report.tolerance,
                "windows": [
                    {"param_lo": w.param_lo, "param_hi": w.param_hi, "max_gap": w.max_gap}
                    for w in report.windows
                ],
            },
        }

    ui_dir = os.environ.get("NEUROMOD_UI_DIR")
    if ui_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = str(candidate) if candidate.is_dir() else None
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
