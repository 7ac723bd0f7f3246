"""Standard metric catalog for compute-placement trade studies.

The registry enumerates every metric the model knows about, with its
preference direction and display units. Entries carry weight 0 and no
bounds; a scenario picks the metrics it cares about and overrides weights
(and optionally bounds) there.

Orbital altitude is not inherently good or bad; it is registered as
lower-better by default (lower altitude means lower propagation delay) and
a scenario may declare the opposite direction.
"""

from __future__ import annotations

from .model import Direction, MetricDef

_LOWER = Direction.LOWER_BETTER
_HIGHER = Direction.HIGHER_BETTER

# (id, direction, units, optional)
_CATALOG: tuple[tuple[str, Direction, str, bool], ...] = (
    ("latency_p99", _LOWER, "ms", False),
    ("latency_p50", _LOWER, "ms", True),
    ("jitter", _LOWER, "ms", True),
    ("success_prob", _HIGHER, "probability", False),
    ("quality", _HIGHER, "score 0-1", False),
    ("sdc_prob", _LOWER, "probability", True),
    ("compute_avail", _HIGHER, "fraction", False),
    ("energy_per_task", _LOWER, "J", False),
    ("peak_power", _LOWER, "W", False),
    ("power_margin", _HIGHER, "W", False),
    ("power_gen", _HIGHER, "W", True),
    ("thermal_margin", _HIGHER, "degC", False),
    ("link_avail", _HIGHER, "fraction", False),
    ("contact_duty", _HIGHER, "fraction", False),
    ("reduction_ratio", _HIGHER, "x", False),
    ("throughput", _HIGHER, "tasks/s", True),
    ("cost_per_task", _LOWER, "USD", False),
    ("ops_minutes", _LOWER, "min/1000 tasks", False),
    ("orbital_altitude", _LOWER, "km", False),
    ("compute_mass", _LOWER, "kg", False),
)


def standard_registry() -> list[MetricDef]:
    """Return the full metric catalog (weight 0, no bounds)."""
    return [
        MetricDef(id=mid, direction=direction, weight=0.0, units=units, optional=optional)
        for mid, direction, units, optional in _CATALOG
    ]


def registry_metric(metric_id: str) -> MetricDef:
    """Look up one catalog entry by id."""
    for m in standard_registry():
        if m.id == metric_id:
            return m
    raise KeyError(metric_id)
