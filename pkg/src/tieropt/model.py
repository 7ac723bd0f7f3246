"""Domain types for compute-tier trade studies.

Everything here is an immutable value object: metric definitions, tier
profiles, mission requirements, the scenario that bundles them, and the
evaluation report types filled in by the scoring engine. No scoring logic
lives in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence


class Direction(str, Enum):
    """Preference direction of a metric."""

    HIGHER_BETTER = "higher_better"
    LOWER_BETTER = "lower_better"


class MissingMetricPolicy(str, Enum):
    """How to treat a requirement whose metric a tier does not report.

    STRICT marks the tier infeasible (the requirement is unverifiable);
    LENIENT lets it pass with a recorded warning.
    """

    STRICT = "strict"
    LENIENT = "lenient"


class BoundsSource(str, Enum):
    """Provenance of the normalization bounds actually used for a metric."""

    DECLARED = "declared"
    DATA_DERIVED = "data_derived"
    DEGENERATE = "degenerate"


#: Requirement field -> metric id it constrains. Thresholds bind to these
#: fixed ids; there is no free-form constraint language.
THRESHOLD_METRICS: dict[str, str] = {
    "max_latency_ms": "latency_p99",
    "min_success": "success_prob",
    "min_quality": "quality",
    "max_cost": "cost_per_task",
}

#: Short labels used in human-readable output ("No (latency)" style).
CONSTRAINT_LABELS: dict[str, str] = {
    "max_latency_ms": "latency",
    "min_success": "success",
    "min_quality": "quality",
    "max_cost": "cost",
    "regulatory_ok": "regulatory",
}


@dataclass(frozen=True)
class MetricDef:
    """One decision criterion: identity, direction, operating bounds, weight.

    ``bounds`` is the expected operating range in the metric's native unit;
    when omitted, the scoring engine derives bounds from the data. Weights
    are relative; they are never renormalized to sum to 1.
    """

    id: str
    direction: Direction
    weight: float = 0.0
    units: str = ""
    bounds: Optional[tuple[float, float]] = None
    optional: bool = False

    def __post_init__(self) -> None:
        if self.bounds is not None:
            object.__setattr__(self, "bounds", (float(self.bounds[0]), float(self.bounds[1])))
        object.__setattr__(self, "weight", float(self.weight))


@dataclass(frozen=True)
class TierProfile:
    """A candidate compute tier with a partial map of raw metric values.

    ``values`` may be empty: a fully unknown tier scores an information
    fraction of zero, it is not an error.
    """

    id: str
    values: Mapping[str, float] = field(default_factory=dict)
    regulatory_ok: bool = True
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", {k: float(v) for k, v in self.values.items()})


@dataclass(frozen=True)
class Requirements:
    """Hard mission thresholds. Absent thresholds are simply not checked."""

    max_latency_ms: Optional[float] = None
    min_success: Optional[float] = None
    min_quality: Optional[float] = None
    max_cost: Optional[float] = None
    missing_metric_policy: MissingMetricPolicy = MissingMetricPolicy.STRICT

    def threshold(self, name: str) -> Optional[float]:
        value = getattr(self, name)
        return None if value is None else float(value)


@dataclass(frozen=True)
class Scenario:
    """The unit of evaluation: metrics, tiers, requirements and the
    missing-data penalty parameter ``lam`` (in [0, 1])."""

    name: str
    metrics: Sequence[MetricDef]
    tiers: Sequence[TierProfile]
    requirements: Requirements
    lam: float
    description: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "metrics", tuple(self.metrics))
        object.__setattr__(self, "tiers", tuple(self.tiers))
        object.__setattr__(self, "lam", float(self.lam))

    def metric(self, metric_id: str) -> MetricDef:
        for m in self.metrics:
            if m.id == metric_id:
                return m
        raise KeyError(metric_id)

    def tier(self, tier_id: str) -> TierProfile:
        for t in self.tiers:
            if t.id == tier_id:
                return t
        raise KeyError(tier_id)


@dataclass(frozen=True)
class ValidationIssue:
    """One violated rule, located by the offending field."""

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


class ScenarioValidationError(ValueError):
    """Raised when an operation requires a valid scenario and got an invalid one."""

    def __init__(self, issues: Sequence[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


@dataclass(frozen=True)
class Violation:
    """A violated feasibility constraint, with enough structure to explain it."""

    constraint: str
    metric: Optional[str]
    threshold: Optional[float]
    observed: Optional[float]
    reason: str

    @property
    def label(self) -> str:
        return CONSTRAINT_LABELS.get(self.constraint, self.constraint)


@dataclass(frozen=True)
class FeasibilityCheck:
    """Outcome of the hard-constraint gate for one tier."""

    feasible: bool
    violations: tuple[Violation, ...]
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class ResolvedBound:
    """Normalization bounds actually used for one metric, with provenance."""

    lo: float
    hi: float
    source: BoundsSource


@dataclass(frozen=True)
class TierReport:
    """Per-tier evaluation output.

    ``u_eff is None`` is the infeasible sentinel: it holds exactly when
    ``feasible`` is false, which holds exactly when ``violations`` is
    non-empty. ``u_base is None`` on a feasible tier means the tier reports
    no positively weighted metric; it is then ranked as if u_base were 0,
    and a warning records that.
    """

    tier_id: str
    feasible: bool
    scores: Mapping[str, float] = field(default_factory=dict)
    u_base: Optional[float] = None
    phi: Optional[float] = None
    u_eff: Optional[float] = None
    violations: tuple[Violation, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "violations", tuple(self.violations))
        object.__setattr__(self, "warnings", tuple(self.warnings))


@dataclass(frozen=True)
class EvaluationResult:
    """Scenario-level evaluation output.

    Besides the per-tier reports, the winner and any u_eff ties, the result
    carries the resolved bounds and the penalty parameter actually used so
    downstream consumers (CLI, service, UI) can display calibration
    provenance without re-deriving it.
    """

    per_tier: Mapping[str, TierReport]
    winner: Optional[str]
    ties: tuple[tuple[str, ...], ...]
    ranking: tuple[str, ...]
    bounds: Mapping[str, ResolvedBound]
    lam: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "ties", tuple(tuple(g) for g in self.ties))
        object.__setattr__(self, "ranking", tuple(self.ranking))


def _is_finite_number(x: object) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def validate_scenario(scenario: Scenario) -> list[ValidationIssue]:
    """Check every scenario invariant; return a (possibly empty) issue list.

    Total: never raises, reports all problems it can find rather than the
    first one.
    """
    issues: list[ValidationIssue] = []
    bad = issues.append

    seen_metric_ids: set[str] = set()
    for i, m in enumerate(scenario.metrics):
        path = f"metrics[{i}]"
        if not m.id:
            bad(ValidationIssue(f"{path}.id", "metric id must be non-empty"))
        if m.id in seen_metric_ids:
            bad(ValidationIssue(f"{path}.id", f"duplicate metric id {m.id!r}"))
        seen_metric_ids.add(m.id)
        if not _is_finite_number(m.weight):
            bad(ValidationIssue(f"{path}.weight", "weight must be a finite number"))
        elif m.weight < 0:
            bad(ValidationIssue(f"{path}.weight", f"weight must be >= 0, got {m.weight}"))
        if m.bounds is not None:
            lo, hi = m.bounds
            if not (_is_finite_number(lo) and _is_finite_number(hi)):
                bad(ValidationIssue(f"{path}.bounds", "bounds must be finite numbers"))
            elif lo > hi:
                bad(ValidationIssue(f"{path}.bounds", f"min {lo} exceeds max {hi}"))

    if not any(m.weight > 0 for m in scenario.metrics if _is_finite_number(m.weight)):
        bad(ValidationIssue("metrics", "at least one metric must have weight > 0"))

    if not scenario.tiers:
        bad(ValidationIssue("tiers", "at least one tier is required"))
    seen_tier_ids: set[str] = set()
    for i, t in enumerate(scenario.tiers):
        path = f"tiers[{i}]"
        if not t.id:
            bad(ValidationIssue(f"{path}.id", "tier id must be non-empty"))
        if t.id in seen_tier_ids:
            bad(ValidationIssue(f"{path}.id", f"duplicate tier id {t.id!r}"))
        seen_tier_ids.add(t.id)
        for key, value in t.values.items():
            if key not in seen_metric_ids:
                bad(ValidationIssue(f"{path}.values.{key}", "value refers to an undeclared metric"))
            if not _is_finite_number(value):
                bad(ValidationIssue(f"{path}.values.{key}", "value must be a finite number"))

    req = scenario.requirements
    for name in ("max_latency_ms", "min_success", "min_quality", "max_cost"):
        value = getattr(req, name)
        if value is None:
            continue
        if not _is_finite_number(value):
            bad(ValidationIssue(f"requirements.{name}", "threshold must be a finite number"))
        elif name in ("min_success", "min_quality") and not 0.0 <= value <= 1.0:
            bad(ValidationIssue(f"requirements.{name}", f"must lie in [0, 1], got {value}"))

    if not _is_finite_number(scenario.lam):
        bad(ValidationIssue("lambda", "lambda must be a finite number"))
    elif not 0.0 <= scenario.lam <= 1.0:
        bad(ValidationIssue("lambda", f"lambda must lie in [0, 1], got {scenario.lam}"))

    return issues
