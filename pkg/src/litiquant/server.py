"""HTTP service over the analysis pipeline.

All request handling is stateless; the scenario store directory is the
only persistent state. Domain degeneracy is never a 5xx: it surfaces as
warnings inside a 200 report. 400 = malformed body, 422 = validation
failure, 409 = store precondition conflict.
"""

from __future__ import annotations

import json
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import analysis, pricing, transaction_cost
from .errors import (
    DegenerateBudget,
    InvalidSweep,
    LitiquantError,
    ParseError,
    UnpricedQuote,
    ValidationError,
)
from .scenario import DisputeScenario
from .store import ScenarioNotFound, ScenarioStore, StoreConflict


def _error(status: int, message: str, field: Optional[str] = None) -> JSONResponse:
    body = {"error": {"message": message}}
    if field is not None:
        body["error"]["field"] = field
    return JSONResponse(status_code=status, content=body)


async def _read_json(request: Request) -> dict:
    raw = await request.body()
    if not raw or not raw.strip():
        raise ParseError("empty request body")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise ParseError("request body must be a JSON object")
    return data


def _scenario_from(data: dict) -> DisputeScenario:
    return DisputeScenario.from_dict(data)


def create_app(store_dir, static_dir=None) -> FastAPI:
    app = FastAPI(title="litiquant", docs_url=None, redoc_url=None)
    store = ScenarioStore(store_dir)

    @app.exception_handler(ParseError)
    async def _parse_error(_req, exc):
        return _error(400, str(exc))

    @app.exception_handler(ValidationError)
    async def _validation_error(_req, exc):
        return _error(422, exc.detail, field=exc.field)

    @app.exception_handler(InvalidSweep)
    async def _invalid_sweep(_req, exc):
        return _error(422, str(exc))

    @app.exception_handler(UnpricedQuote)
    async def _unpriced(_req, exc):
        return _error(422, str(exc))

    @app.exception_handler(DegenerateBudget)
    async def _degenerate_budget(_req, exc):
        return _error(422, str(exc))

    @app.exception_handler(StoreConflict)
    async def _conflict(_req, exc):
        return _error(409, str(exc))

    @app.exception_handler(ScenarioNotFound)
    async def _not_found(_req, exc):
        return _error(404, f"no stored scenario named {exc}")

    @app.exception_handler(LitiquantError)
    async def _domain_error(_req, exc):
        return _error(422, str(exc))

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok"}

    @app.post("/api/v1/analyze")
    async def analyze_endpoint(request: Request):
        data = await _read_json(request)
        report = analysis.analyze(_scenario_from(data))
        # canonical bytes, identical to the CLI json output
        return Response(
            content=analysis.canonical_report_json(report),
            media_type="application/json",
        )

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request):
        data = await _read_json(request)
        for key in ("scenario", "param", "from", "to", "steps"):
            if key not in data:
                raise ValidationError(key, "missing required field")
        series = analysis.sweep(
            _scenario_from(data["scenario"]),
            data["param"],
            float(data["from"]),
            float(data["to"]),
            int(data["steps"]),
        )
        return analysis.sweep_to_dict(series)

    @app.post("/api/v1/simulate")
    async def simulate_endpoint(request: Request):
        data = await _read_json(request)
        if "scenario" not in data:
            raise ValidationError("scenario", "missing required field")
        kwargs = {}
        if "trials" in data:
            kwargs["trials"] = int(data["trials"])
        if "seed" in data:
            kwargs["seed"] = int(data["seed"])
        if "max_rounds" in data:
            kwargs["max_rounds"] = int(data["max_rounds"])
        if "terminal_rule" in data:
            kwargs["terminal_rule"] = str(data["terminal_rule"]).upper()
        estimate = analysis.run_simulation(_scenario_from(data["scenario"]), **kwargs)
        return analysis.estimate_to_dict(estimate)

    @app.post("/api/v1/optimal-cost")
    async def optimal_cost_endpoint(request: Request):
        data = await _read_json(request)
        if "scenario" not in data:
            raise ValidationError("scenario", "missing required field")
        scenario = _scenario_from(data["scenario"])
        utility = None
        if "k" in data and data["k"] is not None:
            utility = transaction_cost.UtilitySpec(deterrence_rate=float(data["k"]))
        tol = float(data["tol"]) if data.get("tol") is not None else None
        result = transaction_cost.optimal_lc(scenario, utility=utility, tol=tol)
        return {
            "lc_star": result.lc_star,
            "rb_star": result.rb_star,
            "utility_star": result.utility_star,
        }

    @app.post("/api/v1/offers/classify")
    async def classify_endpoint(request: Request):
        data = await _read_json(request)
        for key in ("scenario", "offer"):
            if key not in data:
                raise ValidationError(key, "missing required field")
        report = analysis.analyze(_scenario_from(data["scenario"]))
        if report.quote is None:
            raise UnpricedQuote(
                f"scenario is unpriceable: {report.unpriceable_reason}"
            )
        offer = float(data["offer"])
        return {
            "offer": offer,
            "classification": pricing.classify_offer(offer, report.quote),
            "feasible_band": list(report.quote.feasible_band),
        }

    @app.get("/api/v1/scenarios")
    async def list_scenarios():
        return {"scenarios": store.list()}

    @app.get("/api/v1/scenarios/{name}")
    async def get_scenario(name: str):
        scenario, etag = store.get(name)
        return JSONResponse(content=scenario.to_dict(), headers={"ETag": etag})

    @app.put("/api/v1/scenarios/{name}")
    async def put_scenario(name: str, request: Request):
        data = await _read_json(request)
        etag = store.put(name, _scenario_from(data),
                         expected_etag=request.headers.get("If-Match"))
        return JSONResponse(content={"name": name, "etag": etag}, headers={"ETag": etag})

    @app.delete("/api/v1/scenarios/{name}")
    async def delete_scenario(name: str):
        store.delete(name)
        return {"deleted": name}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
