"""Compute-tier decision engine for spacecraft workloads.

Scores candidate compute locations (onboard flight computer, orbital data
center, ground-station edge, terrestrial data center) against weighted
mission metrics, applies hard feasibility gates, penalizes missing
information, and selects the tier with the highest effective utility.
"""

__version__ = "0.1.0"

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
    ValidationIssue,
    Violation,
    validate_scenario,
)
from .registry import standard_registry
from .scoring import (
    base_utility,
    check_feasibility,
    effective_utility,
    evaluate,
    information_fraction,
    normalize_metric,
    resolve_bounds,
)
from .analysis import (
    AnalysisError,
    Crossover,
    Explanation,
    MetricContribution,
    ParetoResult,
    SweepParameter,
    SweepResult,
    SweepRow,
    SweepSpec,
    TierExplanation,
    explain,
    pareto_front,
    sweep,
)
from .scenario_io import (
    ScenarioParseError,
    bundled_scenario_names,
    export_result,
    load_bundled_scenario,
    parse_scenario,
    result_from_dict,
    result_to_dict,
    scenario_to_dict,
    serialize_scenario,
)

__all__ = [
    "__version__",
    "AnalysisError",
    "BoundsSource",
    "Crossover",
    "Direction",
    "EvaluationResult",
    "Explanation",
    "FeasibilityCheck",
    "MetricContribution",
    "MetricDef",
    "MissingMetricPolicy",
    "ParetoResult",
    "Requirements",
    "ResolvedBound",
    "Scenario",
    "ScenarioParseError",
    "ScenarioValidationError",
    "SweepParameter",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "THRESHOLD_METRICS",
    "TierExplanation",
    "TierProfile",
    "TierReport",
    "ValidationIssue",
    "Violation",
    "base_utility",
    "bundled_scenario_names",
    "check_feasibility",
    "effective_utility",
    "evaluate",
    "explain",
    "export_result",
    "information_fraction",
    "load_bundled_scenario",
    "normalize_metric",
    "pareto_front",
    "parse_scenario",
    "resolve_bounds",
    "result_from_dict",
    "result_to_dict",
    "scenario_to_dict",
    "serialize_scenario",
    "standard_registry",
    "sweep",
    "validate_scenario",
]
