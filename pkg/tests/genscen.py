"""Random scenario generation shared by the oracle-equivalence loop and the
hypothesis property suite.

Raw values are drawn on a coarse decimal grid so distinct utilities stay
well separated from float rounding noise (the rescaling property compares
winners across reweighted evaluations).
"""

from __future__ import annotations

import random
from typing import Optional

from hypothesis import strategies as st

from tieropt.model import (
    Direction,
    MetricDef,
    MissingMetricPolicy,
    Requirements,
    Scenario,
    TierProfile,
)

# Constraint-bound metrics keep their registry directions so that improving a
# value can never cross a requirement threshold.
CONSTRAINT_METRICS = {
    "latency_p99": Direction.LOWER_BETTER,
    "success_prob": Direction.HIGHER_BETTER,
    "quality": Direction.HIGHER_BETTER,
    "cost_per_task": Direction.LOWER_BETTER,
}
FREE_METRICS = ("m_alpha", "m_beta")


def random_scenario(
    rng: random.Random,
    max_tiers: int = 5,
    max_metrics: int = 6,
    allow_declared_bounds: bool = True,
    full_reporting: bool = False,
) -> Scenario:
    """One random scenario: <= max_tiers tiers, <= max_metrics metrics,
    random missing entries, random thresholds and regulatory flags."""
    n_metrics = rng.randint(1, max_metrics)
    pool = list(CONSTRAINT_METRICS) + list(FREE_METRICS)
    ids = rng.sample(pool, n_metrics)

    metrics = []
    for mid in ids:
        direction = CONSTRAINT_METRICS.get(
            mid, rng.choice((Direction.HIGHER_BETTER, Direction.LOWER_BETTER))
        )
        weight = rng.choice((0.0, round(rng.uniform(0.05, 5.0), 2)))
        bounds: Optional[tuple[float, float]] = None
        if allow_declared_bounds and rng.random() < 0.3:
            lo = round(rng.uniform(-50.0, 50.0), 2)
            bounds = (lo, round(lo + rng.uniform(0.0, 100.0), 2))
        metrics.append(
            MetricDef(id=mid, direction=direction, weight=weight, units="u", bounds=bounds)
        )
    if not any(m.weight > 0 for m in metrics):
        metrics[0] = MetricDef(
            id=metrics[0].id,
            direction=metrics[0].direction,
            weight=1.0,
            units="u",
            bounds=metrics[0].bounds,
        )

    n_tiers = rng.randint(1, max_tiers)
    tiers = []
    for t in range(n_tiers):
        values = {}
        for m in metrics:
            if full_reporting and m.weight > 0:
                report = True
            else:
                report = rng.random() < 0.8
            if report:
                if m.id in ("success_prob", "quality"):
                    values[m.id] = round(rng.uniform(0.0, 1.0), 4)
                else:
                    values[m.id] = round(rng.uniform(-100.0, 100.0), 3)
        tiers.append(
            TierProfile(
                id=f"T{t}",
                values=values,
                regulatory_ok=rng.random() < 0.85,
            )
        )

    def maybe(p: float, value: float) -> Optional[float]:
        return value if rng.random() < p else None

    requirements = Requirements(
        max_latency_ms=maybe(0.5, round(rng.uniform(-100.0, 100.0), 2)),
        min_success=maybe(0.5, round(rng.uniform(0.0, 1.0), 3)),
        min_quality=maybe(0.5, round(rng.uniform(0.0, 1.0), 3)),
        max_cost=maybe(0.5, round(rng.uniform(-100.0, 100.0), 2)),
        missing_metric_policy=rng.choice(
            (MissingMetricPolicy.STRICT, MissingMetricPolicy.LENIENT)
        ),
    )
    return Scenario(
        name=f"generated-{rng.randrange(10**9)}",
        metrics=metrics,
        tiers=tiers,
        requirements=requirements,
        lam=round(rng.uniform(0.0, 1.0), 3),
    )


@st.composite
def scenarios(
    draw,
    allow_declared_bounds: bool = True,
    full_reporting: bool = False,
) -> Scenario:
    """Hypothesis wrapper around :func:`random_scenario`."""
    seed = draw(st.integers(min_value=0, max_value=2**48))
    return random_scenario(
        random.Random(seed),
        allow_declared_bounds=allow_declared_bounds,
        full_reporting=full_reporting,
    )
