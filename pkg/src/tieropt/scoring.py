"""Scoring engine: normalization, utility, feasibility and tier selection.

All functions are pure and operate on the immutable types from
:mod:`tieropt.model`; they can be called concurrently without
synchronization.

The pipeline implemented by :func:`evaluate`:

1. resolve normalization bounds (declared bounds win, otherwise the
   observed min/max of each metric across tiers),
2. gate each tier on the hard requirements (latency, success, quality,
   cost, regulatory flag),
3. for feasible tiers, normalize every reported metric to [0, 1],
   aggregate the positively weighted ones into a base utility, and
   subtract the missing-information penalty ``lam * (1 - phi)``,
4. pick the feasible tier with the highest effective utility.

Infeasibility is a sentinel state (``u_eff is None``), never a numeric
-infinity, so arithmetic stays total.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .model import (
    BoundsSource,
    Direction,
    EvaluationResult,
    FeasibilityCheck,
    MetricDef,
    MissingMetricPolicy,
    Requirements,
    ResolvedBound,
    Scenario,
    ScenarioValidationError,
    THRESHOLD_METRICS,
    TierProfile,
    TierReport,
    Violation,
    validate_scenario,
)


def resolve_bounds(scenario: Scenario) -> dict[str, ResolvedBound]:
    """Determine the normalization bounds for every metric any tier reports.

    Declared bounds pass through unchanged. Metrics without declared bounds
    get the min/max of their raw values across all tiers reporting them;
    when that range collapses to a single value the entry is flagged
    degenerate (normalization then yields the neutral score 0.5).
    """
    bounds: dict[str, ResolvedBound] = {}
    for m in scenario.metrics:
        if m.bounds is not None:
            bounds[m.id] = ResolvedBound(m.bounds[0], m.bounds[1], BoundsSource.DECLARED)
            continue
        observed = [t.values[m.id] for t in scenario.tiers if m.id in t.values]
        if not observed:
            continue
        lo, hi = min(observed), max(observed)
        source = BoundsSource.DEGENERATE if lo == hi else BoundsSource.DATA_DERIVED
        bounds[m.id] = ResolvedBound(lo, hi, source)
    return bounds


def normalize_metric(raw: float, metric: MetricDef, bounds: tuple[float, float]) -> float:
    """Map a raw metric value onto a dimensionless score in [0, 1].

    Higher-better metrics map ``hi`` to 1, lower-better metrics map ``lo``
    to 1; values outside the bounds are clipped. Degenerate bounds
    (lo == hi) yield the neutral score 0.5 so a non-discriminating metric
    influences no comparison.
    """
    lo, hi = bounds
    if lo == hi:
        return 0.5
    if metric.direction is Direction.HIGHER_BETTER:
        score = (raw - lo) / (hi - lo)
    else:
        score = (hi - raw) / (hi - lo)
    return min(1.0, max(0.0, score))


def base_utility(
    tier: TierProfile,
    metrics: Sequence[MetricDef],
    bounds: Mapping[str, ResolvedBound],
) -> Optional[float]:
    """Weighted average of normalized scores over the tier's known metrics.

    Only positively weighted metrics the tier reports contribute; returns
    None when that weight sum is zero, meaning the tier carries no scorable
    information (not a failure).
    """
    weight_sum = 0.0
    weighted_scores = 0.0
    for m in metrics:
        if m.weight <= 0 or m.id not in tier.values:
            continue
        b = bounds[m.id]
        weighted_scores += m.weight * normalize_metric(tier.values[m.id], m, (b.lo, b.hi))
        weight_sum += m.weight
    if weight_sum == 0.0:
        return None
    return weighted_scores / weight_sum


def information_fraction(tier: TierProfile, metrics: Sequence[MetricDef]) -> float:
    """Fraction of total metric weight for which the tier reports values.

    Both sums range over positively weighted metrics only; zero-weight
    entries carry no preference information and do not penalize a tier
    that omits them.
    """
    w_total = 0.0
    w_known = 0.0
    for m in metrics:
        if m.weight <= 0:
            continue
        w_total += m.weight
        if m.id in tier.values:
            w_known += m.weight
    if w_total == 0.0:
        raise ValueError("scenario declares no positively weighted metric")
    return w_known / w_total


def effective_utility(u_base: float, phi: float, lam: float) -> float:
    """Penalized utility: base utility minus ``lam * (1 - phi)``."""
    return u_base - lam * (1.0 - phi)


def check_feasibility(tier: TierProfile, requirements: Requirements) -> FeasibilityCheck:
    """Apply the hard feasibility gate to one tier.

    Each present threshold is checked against its bound metric; the
    regulatory flag is checked last. All violated constraints are collected
    rather than stopping at the first, so diagnostics are complete. A
    present threshold whose metric the tier does not report is a violation
    under the strict policy and a recorded warning under the lenient one.
    """
    violations: list[Violation] = []
    warnings: list[str] = []

    checks = (
        ("max_latency_ms", "latency_p99", "above"),
        ("min_success", "success_prob", "below"),
        ("min_quality", "quality", "below"),
        ("max_cost", "cost_per_task", "above"),
    )
    for constraint, metric_id, kind in checks:
        threshold = requirements.threshold(constraint)
        if threshold is None:
            continue
        if metric_id not in tier.values:
            message = f"{metric_id} not reported; {constraint} unverifiable"
            if requirements.missing_metric_policy is MissingMetricPolicy.STRICT:
                violations.append(
                    Violation(
                        constraint=constraint,
                        metric=metric_id,
                        threshold=threshold,
                        observed=None,
                        reason=message + " under strict policy",
                    )
                )
            else:
                warnings.append(message + "; passed under lenient policy")
            continue
        observed = tier.values[metric_id]
        violated = observed > threshold if kind == "above" else observed < threshold
        if violated:
            op = ">" if kind == "above" else "<"
            violations.append(
                Violation(
                    constraint=constraint,
                    metric=metric_id,
                    threshold=threshold,
                    observed=observed,
                    reason=f"{metric_id} {observed:g} {op} {constraint} {threshold:g}",
                )
            )

    if not tier.regulatory_ok:
        violations.append(
            Violation(
                constraint="regulatory_ok",
                metric=None,
                threshold=None,
                observed=None,
                reason="regulatory feasibility flag is false",
            )
        )

    return FeasibilityCheck(
        feasible=not violations,
        violations=tuple(violations),
        warnings=tuple(warnings),
    )


def _rank_key(report: TierReport) -> tuple[float, float, float, str]:
    # Ties broken by higher u_base, then higher phi, then tier id.
    u_base = report.u_base if report.u_base is not None else 0.0
    assert report.u_eff is not None and report.phi is not None
    return (-report.u_eff, -u_base, -report.phi, report.tier_id)


def evaluate(scenario: Scenario) -> EvaluationResult:
    """Score every tier and select the winner.

    Raises :class:`ScenarioValidationError` with the full issue list when
    the scenario is invalid. Infeasible tiers get no scores and the
    ``u_eff is None`` sentinel; they can never win, even if every feasible
    tier scores below zero. A feasible tier reporting no positively
    weighted metric is ranked as if its base utility were zero (keeping the
    missing-information penalty), and its report records that.
    """
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioValidationError(issues)

    bounds = resolve_bounds(scenario)
    reports: dict[str, TierReport] = {}
    for tier in scenario.tiers:
        gate = check_feasibility(tier, scenario.requirements)
        if not gate.feasible:
            reports[tier.id] = TierReport(
                tier_id=tier.id,
                feasible=False,
                violations=gate.violations,
                warnings=gate.warnings,
            )
            continue

        scores = {
            metric.id: normalize_metric(
                tier.values[metric.id],
                metric,
                (bounds[metric.id].lo, bounds[metric.id].hi),
            )
            for metric in scenario.metrics
            if metric.id in tier.values
        }
        u_base = base_utility(tier, scenario.metrics, bounds)
        phi = information_fraction(tier, scenario.metrics)
        warnings = list(gate.warnings)
        if u_base is None:
            warnings.append("no positively weighted metric reported; ranked with u_base = 0")
        u_eff = effective_utility(u_base if u_base is not None else 0.0, phi, scenario.lam)
        reports[tier.id] = TierReport(
            tier_id=tier.id,
            feasible=True,
            scores=scores,
            u_base=u_base,
            phi=phi,
            u_eff=u_eff,
            warnings=tuple(warnings),
        )

    feasible = [r for r in reports.values() if r.feasible]
    ranking = tuple(r.tier_id for r in sorted(feasible, key=_rank_key))
    winner = ranking[0] if ranking else None

    by_u_eff: dict[float, list[str]] = {}
    for r in feasible:
        assert r.u_eff is not None
        by_u_eff.setdefault(r.u_eff, []).append(r.tier_id)
    ties = tuple(
        tuple(sorted(group))
        for value, group in sorted(by_u_eff.items(), key=lambda kv: -kv[0])
        if len(group) > 1
    )

    return EvaluationResult(
        per_tier=reports,
        winner=winner,
        ties=ties,
        ranking=ranking,
        bounds=bounds,
        lam=scenario.lam,
    )
