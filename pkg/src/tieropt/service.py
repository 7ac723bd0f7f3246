"""HTTP API exposing evaluation, sweeps, and Pareto analysis.

Evaluation is request-scoped: the scenario travels in the request body, so
client what-if edits never mutate server state. The scenario library is
loaded once at startup and is read-only afterwards. Every evaluate
response embeds the engine version plus the resolved bounds and penalty
parameter actually used.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping, Optional

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .analysis import AnalysisError, SweepSpec, pareto_front, sweep
from .model import Scenario, ScenarioValidationError
from .scenario_io import (
    ScenarioParseError,
    export_result,
    parse_scenario,
    scenario_to_dict,
)
from .scoring import evaluate

DEFAULT_BODY_CAP = 1 << 20  # 1 MiB


def _json_response(payload: Mapping[str, Any], status_code: int = 200) -> Response:
    return Response(
        content=json.dumps(payload, indent=2, sort_keys=True) + "\n",
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(status_code: int, issues) -> Response:
    return _json_response(
        {
            "engine_version": __version__,
            "errors": [{"field": i.field, "message": i.message} for i in issues],
        },
        status_code=status_code,
    )


def _plain_error(status_code: int, message: str) -> Response:
    return _json_response(
        {"engine_version": __version__, "errors": [{"field": "$", "message": message}]},
        status_code=status_code,
    )


def load_library(scenario_dir: Path) -> dict[str, Scenario]:
    """Parse every ``*.json`` scenario in a directory, keyed by scenario name."""
    library: dict[str, Scenario] = {}
    for path in sorted(scenario_dir.glob("*.json")):
        scenario = parse_scenario(path.read_bytes())
        library[scenario.name] = scenario
    return library


def create_app(
    scenario_dir: Optional[Path] = None,
    max_body_bytes: int = DEFAULT_BODY_CAP,
) -> FastAPI:
    """Build the service around a read-only scenario library.

    ``scenario_dir`` defaults to the bundled fixtures directory.
    """
    if scenario_dir is None:
        from importlib import resources

        scenario_dir = Path(str(resources.files("tieropt") / "fixtures"))
    library = load_library(scenario_dir)

    app = FastAPI(title="tieropt", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    async def _read_body(request: Request) -> Optional[bytes]:
        body = await request.body()
        if len(body) > max_body_bytes:
            return None
        return body

    @app.get("/api/scenarios")
    def list_scenarios() -> Response:
        return _json_response(
            {
                "engine_version": __version__,
                "scenarios": [
                    {
                        "name": s.name,
                        "tier_count": len(s.tiers),
                        "metric_count": len(s.metrics),
                    }
                    for s in library.values()
                ],
            }
        )

    @app.get("/api/scenarios/{name}")
    def get_scenario(name: str) -> Response:
        scenario = library.get(name)
        if scenario is None:
            return _plain_error(404, f"unknown scenario {name!r}")
        return _json_response(scenario_to_dict(scenario))

    @app.post("/api/evaluate")
    async def api_evaluate(request: Request) -> Response:
        body = await _read_body(request)
        if body is None:
            return _plain_error(413, f"request body exceeds {max_body_bytes} bytes")
        try:
            scenario = parse_scenario(body)
            result = evaluate(scenario)
        except (ScenarioParseError, ScenarioValidationError) as exc:
            return _error_response(400, exc.issues)
        return Response(content=export_result(result, "json"), media_type="application/json")

    @app.post("/api/sweep")
    async def api_sweep(request: Request) -> Response:
        body = await _read_body(request)
        if body is None:
            return _plain_error(413, f"request body exceeds {max_body_bytes} bytes")
        try:
            envelope = json.loads(body)
            scenario = parse_scenario(
                json.dumps(envelope.get("scenario", {})).encode()
            )
            spec = SweepSpec.from_string(
                str(envelope["parameter"]),
                float(envelope["from"]),
                float(envelope["to"]),
                int(envelope["steps"]),
            )
            result = sweep(scenario, spec)
        except (ScenarioParseError, ScenarioValidationError) as exc:
            return _error_response(400, exc.issues)
        except AnalysisError as exc:
            return _plain_error(400, str(exc))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            return _plain_error(400, f"malformed sweep request: {exc}")
        return _json_response(
            {
                "engine_version": __version__,
                "parameter": result.parameter,
                "rows": [
                    {
                        "value": row.value,
                        "winner": row.winner,
                        "u_eff": dict(row.u_eff),
                    }
                    for row in result.rows
                ],
                "crossovers": [
                    {
                        "from_value": c.lo_value,
                        "to_value": c.hi_value,
                        "winner_before": c.winner_before,
                        "winner_after": c.winner_after,
                    }
                    for c in result.crossovers
                ],
            }
        )

    @app.post("/api/pareto")
    async def api_pareto(request: Request) -> Response:
        body = await _read_body(request)
        if body is None:
            return _plain_error(413, f"request body exceeds {max_body_bytes} bytes")
        try:
            envelope = json.loads(body)
            scenario = parse_scenario(json.dumps(envelope.get("scenario", {})).encode())
            objectives = envelope["objectives"]
            if not isinstance(objectives, list) or not all(isinstance(o, str) for o in objectives):
                raise AnalysisError("objectives must be an array of metric ids")
            result = pareto_front(scenario, objectives)
        except (ScenarioParseError, ScenarioValidationError) as exc:
            return _error_response(400, exc.issues)
        except AnalysisError as exc:
            return _plain_error(400, str(exc))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            return _plain_error(400, f"malformed pareto request: {exc}")
        return _json_response(
            {
                "engine_version": __version__,
                "objectives": list(result.objectives),
                "nondominated": list(result.nondominated),
                "dominated": dict(result.dominated),
                "excluded": list(result.excluded),
                "infeasible": list(result.infeasible),
            }
        )

    return app
