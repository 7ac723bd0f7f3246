"""Scenario file format, bundled fixtures, and result export.

Scenario files are JSON documents with a strict schema: unknown keys are
rejected and every error is located by its JSON path (or line/column for
syntax errors). Serialization is canonical: keys sorted, metrics and tiers
in declaration order, floats rendered shortest-round-trip, so
``parse(serialize(s)) == s`` and serialized bytes are stable across runs.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from typing import Any, Mapping, Optional, Sequence, Union

from . import __version__
from .model import (
    BoundsSource,
    Direction,
    EvaluationResult,
    MetricDef,
    MissingMetricPolicy,
    Requirements,
    ResolvedBound,
    Scenario,
    TierProfile,
    TierReport,
    ValidationIssue,
    Violation,
    validate_scenario,
)

_TOP_KEYS = {"name", "lambda", "metrics", "tiers", "requirements", "description"}
_METRIC_KEYS = {"id", "direction", "weight", "units", "min", "max", "optional"}
_TIER_KEYS = {"id", "label", "regulatory_ok", "values"}
_REQ_KEYS = {"max_latency_ms", "min_success", "min_quality", "max_cost", "missing_metric_policy"}

EXPORT_FORMATS = ("json", "csv", "table")


class ScenarioParseError(ValueError):
    """Malformed scenario document; carries one issue per distinct problem."""

    def __init__(self, issues: Sequence[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class _Walker:
    """Schema walk that collects located issues instead of aborting."""

    def __init__(self) -> None:
        self.issues: list[ValidationIssue] = []

    def fail(self, path: str, message: str) -> None:
        self.issues.append(ValidationIssue(path, message))

    def reject_unknown(self, obj: Mapping[str, Any], allowed: set[str], path: str) -> None:
        for key in obj:
            if key not in allowed:
                self.fail(f"{path}.{key}", "unknown key")

    def string(self, obj: Mapping[str, Any], key: str, path: str, default: Optional[str] = None):
        if key not in obj:
            if default is None:
                self.fail(f"{path}.{key}", "missing required key")
            return default
        value = obj[key]
        if not isinstance(value, str):
            self.fail(f"{path}.{key}", f"expected string, got {type(value).__name__}")
            return default
        return value

    def number(self, obj: Mapping[str, Any], key: str, path: str, required: bool = True):
        if key not in obj:
            if required:
                self.fail(f"{path}.{key}", "missing required key")
            return None
        value = obj[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.fail(f"{path}.{key}", f"expected number, got {type(value).__name__}")
            return None
        return float(value)

    def boolean(self, obj: Mapping[str, Any], key: str, path: str, default: Optional[bool] = None):
        if key not in obj:
            if default is None:
                self.fail(f"{path}.{key}", "missing required key")
            return default
        value = obj[key]
        if not isinstance(value, bool):
            self.fail(f"{path}.{key}", f"expected boolean, got {type(value).__name__}")
            return default
        return value

    def array(self, obj: Mapping[str, Any], key: str, path: str) -> list:
        if key not in obj:
            self.fail(f"{path}.{key}", "missing required key")
            return []
        value = obj[key]
        if not isinstance(value, list):
            self.fail(f"{path}.{key}", f"expected array, got {type(value).__name__}")
            return []
        return value

    def object(self, obj: Mapping[str, Any], key: str, path: str) -> dict:
        if key not in obj:
            self.fail(f"{path}.{key}", "missing required key")
            return {}
        value = obj[key]
        if not isinstance(value, dict):
            self.fail(f"{path}.{key}", f"expected object, got {type(value).__name__}")
            return {}
        return value


def _parse_metric(w: _Walker, obj: Any, path: str) -> Optional[MetricDef]:
    if not isinstance(obj, dict):
        w.fail(path, f"expected object, got {type(obj).__name__}")
        return None
    w.reject_unknown(obj, _METRIC_KEYS, path)
    metric_id = w.string(obj, "id", path)
    direction_raw = w.string(obj, "direction", path)
    direction: Optional[Direction] = None
    if direction_raw is not None:
        try:
            direction = Direction(direction_raw)
        except ValueError:
            w.fail(
                f"{path}.direction",
                f"unknown direction {direction_raw!r}; expected 'higher_better' or 'lower_better'",
            )
    weight = w.number(obj, "weight", path)
    units = w.string(obj, "units", path)
    lo = w.number(obj, "min", path, required=False)
    hi = w.number(obj, "max", path, required=False)
    if ("min" in obj) != ("max" in obj):
        w.fail(path, "min and max must be given together")
    optional = w.boolean(obj, "optional", path, default=False)
    if metric_id is None or direction is None or weight is None or units is None:
        return None
    bounds = (lo, hi) if lo is not None and hi is not None else None
    return MetricDef(
        id=metric_id, direction=direction, weight=weight, units=units,
        bounds=bounds, optional=bool(optional),
    )


def _parse_tier(w: _Walker, obj: Any, path: str) -> Optional[TierProfile]:
    if not isinstance(obj, dict):
        w.fail(path, f"expected object, got {type(obj).__name__}")
        return None
    w.reject_unknown(obj, _TIER_KEYS, path)
    tier_id = w.string(obj, "id", path)
    label = w.string(obj, "label", path, default="")
    regulatory_ok = w.boolean(obj, "regulatory_ok", path)
    values_obj = w.object(obj, "values", path)
    values: dict[str, float] = {}
    for key, value in values_obj.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            w.fail(f"{path}.values.{key}", f"expected number, got {type(value).__name__}")
            continue
        values[key] = float(value)
    if tier_id is None or regulatory_ok is None:
        return None
    return TierProfile(id=tier_id, values=values, regulatory_ok=regulatory_ok, label=label or "")


def parse_scenario(data: Union[bytes, str]) -> Scenario:
    """Parse and validate a scenario document.

    Raises :class:`ScenarioParseError` carrying every distinct, located
    problem: syntax errors with line/column, schema errors with JSON path,
    and all core invariant violations.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScenarioParseError([ValidationIssue("$", f"not valid UTF-8: {exc}")]) from None
    try:
        root = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            [ValidationIssue(f"line {exc.lineno} column {exc.colno}", exc.msg)]
        ) from None

    w = _Walker()
    if not isinstance(root, dict):
        raise ScenarioParseError([ValidationIssue("$", "document root must be an object")])
    w.reject_unknown(root, _TOP_KEYS, "$")
    name = w.string(root, "name", "$")
    lam = w.number(root, "lambda", "$")
    description = w.string(root, "description", "$", default="")

    metrics = [
        m
        for i, raw in enumerate(w.array(root, "metrics", "$"))
        if (m := _parse_metric(w, raw, f"$.metrics[{i}]")) is not None
    ]
    tiers = [
        t
        for i, raw in enumerate(w.array(root, "tiers", "$"))
        if (t := _parse_tier(w, raw, f"$.tiers[{i}]")) is not None
    ]

    requirements = Requirements()
    if "requirements" in root:
        req_obj = w.object(root, "requirements", "$")
        w.reject_unknown(req_obj, _REQ_KEYS, "$.requirements")
        policy_raw = w.string(req_obj, "missing_metric_policy", "$.requirements")
        policy = MissingMetricPolicy.STRICT
        if policy_raw is not None:
            try:
                policy = MissingMetricPolicy(policy_raw)
            except ValueError:
                w.fail(
                    "$.requirements.missing_metric_policy",
                    f"unknown policy {policy_raw!r}; expected 'strict' or 'lenient'",
                )
        requirements = Requirements(
            max_latency_ms=w.number(req_obj, "max_latency_ms", "$.requirements", required=False),
            min_success=w.number(req_obj, "min_success", "$.requirements", required=False),
            min_quality=w.number(req_obj, "min_quality", "$.requirements", required=False),
            max_cost=w.number(req_obj, "max_cost", "$.requirements", required=False),
            missing_metric_policy=policy,
        )
    else:
        w.fail("$.requirements", "missing required key")

    if w.issues:
        raise ScenarioParseError(w.issues)

    scenario = Scenario(
        name=name,
        metrics=metrics,
        tiers=tiers,
        requirements=requirements,
        lam=lam,
        description=description or "",
    )
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioParseError(issues)
    return scenario


def scenario_to_dict(scenario: Scenario) -> dict:
    """Canonical plain-dict form of a scenario (floats everywhere)."""
    metrics = []
    for m in scenario.metrics:
        entry: dict[str, Any] = {
            "id": m.id,
            "direction": m.direction.value,
            "weight": float(m.weight),
            "units": m.units,
        }
        if m.bounds is not None:
            entry["min"] = float(m.bounds[0])
            entry["max"] = float(m.bounds[1])
        if m.optional:
            entry["optional"] = True
        metrics.append(entry)
    tiers = []
    for t in scenario.tiers:
        entry = {
            "id": t.id,
            "regulatory_ok": t.regulatory_ok,
            "values": {k: float(v) for k, v in t.values.items()},
        }
        if t.label:
            entry["label"] = t.label
        tiers.append(entry)
    requirements: dict[str, Any] = {
        "missing_metric_policy": scenario.requirements.missing_metric_policy.value
    }
    for key in ("max_latency_ms", "min_success", "min_quality", "max_cost"):
        value = getattr(scenario.requirements, key)
        if value is not None:
            requirements[key] = float(value)
    doc: dict[str, Any] = {
        "name": scenario.name,
        "lambda": float(scenario.lam),
        "metrics": metrics,
        "tiers": tiers,
        "requirements": requirements,
    }
    if scenario.description:
        doc["description"] = scenario.description
    return doc


def serialize_scenario(scenario: Scenario) -> str:
    """Render the canonical JSON form (deterministic bytes)."""
    return json.dumps(scenario_to_dict(scenario), indent=2, sort_keys=True) + "\n"


def _violation_to_dict(v: Violation) -> dict:
    return {
        "constraint": v.constraint,
        "metric": v.metric,
        "threshold": v.threshold,
        "observed": v.observed,
        "reason": v.reason,
    }


def result_to_dict(result: EvaluationResult) -> dict:
    """Wire form of an evaluation result, heatmap-ready and self-describing."""
    tiers = {}
    for tier_id, report in result.per_tier.items():
        tiers[tier_id] = {
            "feasible": report.feasible,
            "scores": {k: float(v) for k, v in report.scores.items()},
            "u_base": report.u_base,
            "phi": report.phi,
            "u_eff": report.u_eff,
            "violations": [_violation_to_dict(v) for v in report.violations],
            "warnings": list(report.warnings),
        }
    return {
        "engine_version": __version__,
        "lambda": float(result.lam),
        "bounds": {
            mid: {"min": b.lo, "max": b.hi, "source": b.source.value}
            for mid, b in result.bounds.items()
        },
        "winner": result.winner,
        "ranking": list(result.ranking),
        "ties": [list(group) for group in result.ties],
        "tiers": tiers,
    }


def result_from_dict(doc: Mapping[str, Any]) -> EvaluationResult:
    """Rebuild an :class:`EvaluationResult` from its wire form."""
    per_tier = {}
    for tier_id, entry in doc["tiers"].items():
        per_tier[tier_id] = TierReport(
            tier_id=tier_id,
            feasible=entry["feasible"],
            scores={k: float(v) for k, v in entry["scores"].items()},
            u_base=entry["u_base"],
            phi=entry["phi"],
            u_eff=entry["u_eff"],
            violations=tuple(
                Violation(
                    constraint=v["constraint"],
                    metric=v["metric"],
                    threshold=v["threshold"],
                    observed=v["observed"],
                    reason=v["reason"],
                )
                for v in entry["violations"]
            ),
            warnings=tuple(entry["warnings"]),
        )
    bounds = {
        mid: ResolvedBound(float(b["min"]), float(b["max"]), BoundsSource(b["source"]))
        for mid, b in doc["bounds"].items()
    }
    return EvaluationResult(
        per_tier=per_tier,
        winner=doc["winner"],
        ties=tuple(tuple(group) for group in doc["ties"]),
        ranking=tuple(doc["ranking"]),
        bounds=bounds,
        lam=float(doc["lambda"]),
    )


def _format_optional(value: Optional[float], digits: int) -> str:
    return "--" if value is None else f"{value:.{digits}f}"


def _feasible_cell(report: TierReport) -> str:
    if report.feasible:
        return "Yes"
    return f"No ({report.violations[0].label})" if report.violations else "No"


def _result_table(result: EvaluationResult) -> str:
    # Feasible tiers best-first, then infeasible tiers in declaration order.
    ordered = list(result.ranking) + [
        tid for tid, r in result.per_tier.items() if not r.feasible
    ]
    rows = []
    for tier_id in ordered:
        report = result.per_tier[tier_id]
        rows.append(
            (
                tier_id + (" *" if tier_id == result.winner else ""),
                _feasible_cell(report),
                _format_optional(report.u_base, 4),
                _format_optional(report.phi, 3),
                "-inf" if report.u_eff is None else f"{report.u_eff:.4f}",
            )
        )
    header = ("tier", "feasible", "u_base", "phi", "u_eff")
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c]) for c in range(5)]
    lines = ["  ".join(h.ljust(widths[c]) for c, h in enumerate(header)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip())
    lines.append("")
    lines.append(f"winner: {result.winner if result.winner else 'none (no feasible tier)'}")
    for group in result.ties:
        lines.append(f"tied at equal u_eff: {', '.join(group)}")
    return "\n".join(lines) + "\n"


def _result_csv(result: EvaluationResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["tier", "metric", "score"])
    for tier_id, report in result.per_tier.items():
        for metric_id, score in report.scores.items():
            writer.writerow([tier_id, metric_id, repr(float(score))])
    return buffer.getvalue()


def export_result(result: EvaluationResult, fmt: str = "table") -> str:
    """Render an evaluation result as ``json``, ``csv`` or ``table``.

    JSON mirrors the full result (deterministic bytes); CSV emits one row
    per (tier, metric) normalized score for heatmap plotting; the table is
    a human-readable ranking with a feasibility column.
    """
    if fmt == "json":
        return json.dumps(result_to_dict(result), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _result_csv(result)
    if fmt == "table":
        return _result_table(result)
    raise ValueError(f"unknown export format {fmt!r}; expected one of {', '.join(EXPORT_FORMATS)}")


def bundled_scenario_names() -> list[str]:
    """Names of the scenario fixtures shipped with the package."""
    files = resources.files("tieropt") / "fixtures"
    return sorted(p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json"))


def load_bundled_scenario(name: str) -> Scenario:
    """Load a bundled fixture (``ids`` or ``suncatcher``) by name."""
    path = resources.files("tieropt") / "fixtures" / f"{name}.json"
    return parse_scenario(path.read_bytes())
