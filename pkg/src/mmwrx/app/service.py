"""HTTP API: presets catalog, sweep evaluation, health.

All endpoints are stateless; a sweep request is validated with the same
models as the CLI and returns the identical canonical JSON bytes. Errors
are reported as ``{"code", "field", "message"}``.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import __version__
from ..presets import component_presets, components_to_dict, scenario_presets, scenario_to_dict
from ..tradeoff import candidate_grid, sweep as run_sweep
from .config import SweepRequest, describe_validation_error
from .export import SCHEMA_VERSION, chart_document, to_json_bytes


def _error(status: int, code: str, field: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "field": field, "message": message})


def create_app(max_trial_evals: int = 1_000_000) -> FastAPI:
    app = FastAPI(title="mmwrx", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        field, message = describe_validation_error(exc.errors())
        return _error(422, "validation_error", field, message)

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok", "schema": SCHEMA_VERSION, "version": __version__}

    @app.get("/api/v1/presets")
    def presets():
        doc = {
            "schema": SCHEMA_VERSION,
            "scenarios": {name: scenario_to_dict(s)
                          for name, s in scenario_presets().items()},
            "components": {name: components_to_dict(c)
                           for name, c in component_presets().items()},
        }
        return Response(content=(json.dumps(doc, indent=2) + "\n").encode(),
                        media_type="application/json")

    # plain def: the sweep is CPU-bound and runs in the threadpool so the
    # event loop stays responsive under concurrent requests
    @app.post("/api/v1/sweep")
    def sweep_endpoint(request: SweepRequest):
        try:
            scenario, components = request.resolve()
        except ValueError as exc:
            message = exc.args[0] if exc.args else str(exc)
            return _error(422, "validation_error", "scenario", str(message))
        evals = scenario.n_trials * len(candidate_grid(scenario))
        if evals > max_trial_evals:
            return _error(
                413, "sweep_too_large", "scenario.n_trials",
                f"{evals} trial-evaluations exceed the server cap of {max_trial_evals}")
        result = run_sweep(scenario, components)
        doc = chart_document(result, components, request.iso_power_w)
        return Response(content=to_json_bytes(doc), media_type="application/json")

    return app
