"""Decision-support layers on top of the scoring engine.

Sensitivity sweeps re-evaluate a scenario across a parameter range and
flag winner crossovers; the Pareto front exposes the multi-objective
structure the scalarized utility hides; explanations decompose a tier's
utility into per-metric contributions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Optional, Sequence

from .model import (
    EvaluationResult,
    Direction,
    ResolvedBound,
    Scenario,
    ScenarioValidationError,
    Violation,
    validate_scenario,
)
from .scoring import check_feasibility, evaluate

_THRESHOLD_FIELDS = ("max_latency_ms", "min_success", "min_quality", "max_cost")


class AnalysisError(ValueError):
    """Bad sweep/pareto specification (unknown parameter, empty range, ...)."""


class SweepParameter(str, Enum):
    METRIC_WEIGHT = "weight"
    LAMBDA = "lambda"
    THRESHOLD = "threshold"


@dataclass(frozen=True)
class SweepSpec:
    """What to vary and over which grid.

    ``target`` names the metric (for weight sweeps) or the requirement
    field (for threshold sweeps); lambda sweeps take no target. The grid is
    ``steps`` evenly spaced values from ``lo`` to ``hi``; a zero-width
    range is rejected.
    """

    kind: SweepParameter
    lo: float
    hi: float
    steps: int
    target: Optional[str] = None

    @classmethod
    def from_string(cls, parameter: str, lo: float, hi: float, steps: int) -> "SweepSpec":
        """Build a spec from the CLI/API form ``lambda``, ``weight:<metric>``
        or ``threshold:<field>``."""
        kind, _, target = parameter.partition(":")
        try:
            parsed = SweepParameter(kind)
        except ValueError:
            raise AnalysisError(
                f"unknown sweep parameter {parameter!r}; expected 'lambda', "
                "'weight:<metric-id>' or 'threshold:<requirement>'"
            ) from None
        return cls(kind=parsed, lo=lo, hi=hi, steps=steps, target=target or None)

    def describe(self) -> str:
        return self.kind.value if self.target is None else f"{self.kind.value}:{self.target}"


@dataclass(frozen=True)
class SweepRow:
    """One grid point: parameter value, winner, and feasible-tier utilities."""

    value: float
    winner: Optional[str]
    u_eff: Mapping[str, float]


@dataclass(frozen=True)
class Crossover:
    """The winner changed between two adjacent grid points."""

    lo_value: float
    hi_value: float
    winner_before: Optional[str]
    winner_after: Optional[str]


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    rows: tuple[SweepRow, ...]
    crossovers: tuple[Crossover, ...]


def _check_spec(scenario: Scenario, spec: SweepSpec) -> None:
    if spec.steps < 2:
        raise AnalysisError(f"steps must be >= 2, got {spec.steps}")
    if not spec.lo < spec.hi:
        raise AnalysisError(f"sweep range must have lo < hi, got [{spec.lo}, {spec.hi}]")
    if spec.kind is SweepParameter.METRIC_WEIGHT:
        if spec.target is None:
            raise AnalysisError("weight sweep needs a metric id, e.g. weight:latency_p99")
        if all(m.id != spec.target for m in scenario.metrics):
            raise AnalysisError(f"unknown metric id {spec.target!r}")
        if spec.lo < 0:
            raise AnalysisError("metric weights cannot be swept below 0")
    elif spec.kind is SweepParameter.LAMBDA:
        if spec.target is not None:
            raise AnalysisError("lambda sweep takes no target")
        if spec.lo < 0 or spec.hi > 1:
            raise AnalysisError("lambda sweeps must stay within [0, 1]")
    else:
        if spec.target not in _THRESHOLD_FIELDS:
            raise AnalysisError(
                f"unknown threshold {spec.target!r}; expected one of {', '.join(_THRESHOLD_FIELDS)}"
            )
        if spec.target in ("min_success", "min_quality") and (spec.lo < 0 or spec.hi > 1):
            raise AnalysisError(f"{spec.target} sweeps must stay within [0, 1]")


def _apply(scenario: Scenario, spec: SweepSpec, value: float) -> Scenario:
    if spec.kind is SweepParameter.LAMBDA:
        return replace(scenario, lam=value)
    if spec.kind is SweepParameter.METRIC_WEIGHT:
        metrics = tuple(
            replace(m, weight=value) if m.id == spec.target else m for m in scenario.metrics
        )
        return replace(scenario, metrics=metrics)
    requirements = replace(scenario.requirements, **{spec.target: value})
    return replace(scenario, requirements=requirements)


def sweep(scenario: Scenario, spec: SweepSpec) -> SweepResult:
    """Evaluate the scenario at every grid point of the swept parameter.

    Each row records the winner and the full feasible-tier utility vector;
    adjacent rows whose winners differ are flagged as crossovers. Swept
    weights enter the utility as given (no renormalization; the selection
    is invariant to weight scale anyway).
    """
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioValidationError(issues)
    _check_spec(scenario, spec)

    step = (spec.hi - spec.lo) / (spec.steps - 1)
    values = [spec.lo + i * step for i in range(spec.steps)]
    values[-1] = spec.hi

    rows: list[SweepRow] = []
    for value in values:
        result = evaluate(_apply(scenario, spec, value))
        u_eff = {
            tier_id: report.u_eff
            for tier_id, report in result.per_tier.items()
            if report.feasible and report.u_eff is not None
        }
        rows.append(SweepRow(value=value, winner=result.winner, u_eff=u_eff))

    crossovers = tuple(
        Crossover(prev.value, row.value, prev.winner, row.winner)
        for prev, row in zip(rows, rows[1:])
        if prev.winner != row.winner
    )
    return SweepResult(parameter=spec.describe(), rows=tuple(rows), crossovers=crossovers)


@dataclass(frozen=True)
class ParetoResult:
    """Nondominated feasible tiers over the chosen raw-value objectives.

    ``dominated`` maps each dominated tier to one witness that dominates
    it; ``excluded`` lists feasible tiers skipped because they do not
    report every objective; ``infeasible`` lists tiers removed by the
    feasibility gate before the comparison.
    """

    nondominated: tuple[str, ...]
    dominated: Mapping[str, str]
    objectives: tuple[str, ...]
    excluded: tuple[str, ...]
    infeasible: tuple[str, ...]


def _dominates(
    a: Mapping[str, float],
    b: Mapping[str, float],
    objectives: Sequence[str],
    directions: Mapping[str, Direction],
) -> bool:
    at_least_as_good = True
    strictly_better = False
    for obj in objectives:
        va, vb = a[obj], b[obj]
        if directions[obj] is Direction.LOWER_BETTER:
            va, vb = -va, -vb
        if va < vb:
            at_least_as_good = False
            break
        if va > vb:
            strictly_better = True
    return at_least_as_good and strictly_better


def pareto_front(scenario: Scenario, objectives: Sequence[str]) -> ParetoResult:
    """Identify the feasible tiers no other feasible tier dominates.

    Dominance compares raw metric values direction-aware (at least as good
    everywhere, strictly better somewhere), which keeps the front invariant
    to any choice of normalization bounds.
    """
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioValidationError(issues)
    if not objectives:
        raise AnalysisError("pareto analysis needs at least one objective")
    declared = {m.id: m.direction for m in scenario.metrics}
    unknown = [obj for obj in objectives if obj not in declared]
    if unknown:
        raise AnalysisError(f"unknown objective metric ids: {', '.join(unknown)}")
    if len(set(objectives)) != len(objectives):
        raise AnalysisError("duplicate objectives")

    infeasible: list[str] = []
    excluded: list[str] = []
    candidates: list[str] = []
    raw: dict[str, dict[str, float]] = {}
    for tier in scenario.tiers:
        if not check_feasibility(tier, scenario.requirements).feasible:
            infeasible.append(tier.id)
        elif any(obj not in tier.values for obj in objectives):
            excluded.append(tier.id)
        else:
            candidates.append(tier.id)
            raw[tier.id] = {obj: tier.values[obj] for obj in objectives}

    dominated: dict[str, str] = {}
    nondominated: list[str] = []
    for tier_id in candidates:
        witness = next(
            (
                other
                for other in candidates
                if other != tier_id and _dominates(raw[other], raw[tier_id], objectives, declared)
            ),
            None,
        )
        if witness is None:
            nondominated.append(tier_id)
        else:
            dominated[tier_id] = witness

    return ParetoResult(
        nondominated=tuple(nondominated),
        dominated=dominated,
        objectives=tuple(objectives),
        excluded=tuple(excluded),
        infeasible=tuple(infeasible),
    )


@dataclass(frozen=True)
class MetricContribution:
    """One reported metric's share of a tier's base utility."""

    metric_id: str
    raw: float
    bounds: ResolvedBound
    score: float
    weight: float
    contribution: float


@dataclass(frozen=True)
class TierExplanation:
    tier_id: str
    feasible: bool
    contributions: tuple[MetricContribution, ...]
    u_base: Optional[float]
    phi: Optional[float]
    penalty: Optional[float]
    u_eff: Optional[float]
    violations: tuple[Violation, ...]
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class Explanation:
    scenario_name: str
    lam: float
    tiers: tuple[TierExplanation, ...]


def explain(result: EvaluationResult, scenario: Scenario) -> Explanation:
    """Decompose an evaluation into per-metric contributions.

    For each feasible tier, every reported metric appears with its raw
    value, the bounds used, the normalized score and its weighted share of
    the base utility (shares sum to u_base). Infeasible tiers carry their
    violation list and no score table. Raises ValueError when the result
    was not produced from this scenario.
    """
    if set(result.per_tier) != {t.id for t in scenario.tiers}:
        raise ValueError("result does not match scenario: tier ids differ")
    if result.lam != scenario.lam:
        raise ValueError("result does not match scenario: lambda differs")

    tiers: list[TierExplanation] = []
    for tier in scenario.tiers:
        report = result.per_tier[tier.id]
        if not report.feasible:
            tiers.append(
                TierExplanation(
                    tier_id=tier.id,
                    feasible=False,
                    contributions=(),
                    u_base=None,
                    phi=None,
                    penalty=None,
                    u_eff=None,
                    violations=report.violations,
                    warnings=report.warnings,
                )
            )
            continue
        w_known = sum(m.weight for m in scenario.metrics if m.weight > 0 and m.id in tier.values)
        contributions = tuple(
            MetricContribution(
                metric_id=m.id,
                raw=tier.values[m.id],
                bounds=result.bounds[m.id],
                score=report.scores[m.id],
                weight=m.weight,
                contribution=(m.weight * report.scores[m.id] / w_known) if w_known > 0 else 0.0,
            )
            for m in scenario.metrics
            if m.id in tier.values
        )
        assert report.phi is not None
        tiers.append(
            TierExplanation(
                tier_id=tier.id,
                feasible=True,
                contributions=contributions,
                u_base=report.u_base,
                phi=report.phi,
                penalty=scenario.lam * (1.0 - report.phi),
                u_eff=report.u_eff,
                violations=(),
                warnings=report.warnings,
            )
        )
    return Explanation(scenario_name=scenario.name, lam=scenario.lam, tiers=tuple(tiers))
