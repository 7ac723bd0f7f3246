"""Core type invariants, validation, and the standard metric registry."""

import dataclasses
import math

import pytest

from tieropt import (
    Direction,
    MetricDef,
    MissingMetricPolicy,
    Requirements,
    Scenario,
    TierProfile,
    standard_registry,
    validate_scenario,
)


def _toy_scenario(**overrides):
    base = dict(
        name="toy",
        metrics=[
            MetricDef(id="latency_p99", direction=Direction.LOWER_BETTER, weight=1.0, units="ms"),
            MetricDef(id="quality", direction=Direction.HIGHER_BETTER, weight=0.5, units=""),
        ],
        tiers=[
            TierProfile(id="A", values={"latency_p99": 10.0, "quality": 0.9}),
            TierProfile(id="B", values={"latency_p99": 20.0, "quality": 0.8}),
        ],
        requirements=Requirements(),
        lam=0.2,
    )
    base.update(overrides)
    return Scenario(**base)


class TestRegistry:
    def test_contains_core_and_optional_metrics(self):
        ids = {m.id for m in standard_registry()}
        expected = {
            "latency_p99", "latency_p50", "jitter", "success_prob", "quality",
            "sdc_prob", "compute_avail", "energy_per_task", "peak_power",
            "power_margin", "power_gen", "thermal_margin", "link_avail",
            "contact_duty", "reduction_ratio", "throughput", "cost_per_task",
            "ops_minutes", "orbital_altitude", "compute_mass",
        }
        assert expected <= ids

    def test_latency_is_lower_better(self):
        by_id = {m.id: m for m in standard_registry()}
        assert by_id["latency_p99"].direction is Direction.LOWER_BETTER

    def test_reduction_ratio_is_higher_better(self):
        by_id = {m.id: m for m in standard_registry()}
        assert by_id["reduction_ratio"].direction is Direction.HIGHER_BETTER

    def test_directions_match_rationale(self):
        by_id = {m.id: m for m in standard_registry()}
        lower = ["latency_p99", "latency_p50", "jitter", "energy_per_task", "peak_power",
                 "cost_per_task", "ops_minutes", "compute_mass", "sdc_prob", "orbital_altitude"]
        higher = ["success_prob", "quality", "power_margin", "power_gen", "thermal_margin",
                  "link_avail", "contact_duty", "reduction_ratio", "throughput", "compute_avail"]
        for mid in lower:
            assert by_id[mid].direction is Direction.LOWER_BETTER, mid
        for mid in higher:
            assert by_id[mid].direction is Direction.HIGHER_BETTER, mid

    def test_ids_unique_weights_zero_no_bounds(self):
        registry = standard_registry()
        assert len({m.id for m in registry}) == len(registry)
        assert all(m.weight == 0.0 for m in registry)
        assert all(m.bounds is None for m in registry)

    def test_optional_flags(self):
        optional = {m.id for m in standard_registry() if m.optional}
        assert optional == {"jitter", "sdc_prob", "throughput", "latency_p50", "power_gen"}


class TestValidateScenario:
    def test_valid_fixture_has_no_issues(self, ids_scenario):
        assert validate_scenario(ids_scenario) == []

    def test_negative_weight(self):
        s = _toy_scenario(
            metrics=[
                MetricDef(id="latency_p99", direction=Direction.LOWER_BETTER, weight=-0.1, units="ms"),
                MetricDef(id="quality", direction=Direction.HIGHER_BETTER, weight=0.5, units=""),
            ]
        )
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "weight" in issues[0].field

    def test_duplicate_tier_id(self):
        s = _toy_scenario(
            tiers=[
                TierProfile(id="FC", values={"latency_p99": 10.0}),
                TierProfile(id="FC", values={"latency_p99": 20.0}),
            ]
        )
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "duplicate tier id" in issues[0].message

    def test_duplicate_metric_id(self):
        dup = MetricDef(id="quality", direction=Direction.HIGHER_BETTER, weight=0.5, units="")
        s = _toy_scenario(metrics=[dup, dup])
        assert any("duplicate metric id" in i.message for i in validate_scenario(s))

    def test_inverted_bounds(self):
        s = _toy_scenario(
            metrics=[
                MetricDef(id="latency_p99", direction=Direction.LOWER_BETTER,
                          weight=1.0, units="ms", bounds=(100.0, 10.0)),
            ],
            tiers=[TierProfile(id="A", values={"latency_p99": 50.0})],
        )
        assert any("bounds" in i.field for i in validate_scenario(s))

    def test_equal_bounds_allowed(self):
        s = _toy_scenario(
            metrics=[
                MetricDef(id="latency_p99", direction=Direction.LOWER_BETTER,
                          weight=1.0, units="ms", bounds=(10.0, 10.0)),
            ],
            tiers=[TierProfile(id="A", values={"latency_p99": 50.0})],
        )
        assert validate_scenario(s) == []

    def test_value_for_undeclared_metric(self):
        s = _toy_scenario(tiers=[TierProfile(id="A", values={"nope": 1.0})])
        assert any("undeclared metric" in i.message for i in validate_scenario(s))

    def test_empty_values_is_fine(self):
        s = _toy_scenario(tiers=[TierProfile(id="A", values={})])
        assert validate_scenario(s) == []

    def test_no_tiers(self):
        s = _toy_scenario(tiers=[])
        assert any(i.field == "tiers" for i in validate_scenario(s))

    def test_all_zero_weights(self):
        s = _toy_scenario(
            metrics=[MetricDef(id="quality", direction=Direction.HIGHER_BETTER, weight=0.0, units="")],
            tiers=[TierProfile(id="A", values={"quality": 0.5})],
        )
        assert any("weight > 0" in i.message for i in validate_scenario(s))

    @pytest.mark.parametrize("lam", [-0.1, 1.5, math.nan, math.inf])
    def test_lambda_out_of_range(self, lam):
        s = _toy_scenario(lam=lam)
        assert any(i.field == "lambda" for i in validate_scenario(s))

    @pytest.mark.parametrize("field,value", [("min_success", 1.2), ("min_quality", -0.2)])
    def test_unit_interval_thresholds(self, field, value):
        s = _toy_scenario(requirements=Requirements(**{field: value}))
        assert any(field in i.field for i in validate_scenario(s))

    def test_nan_metric_value(self):
        s = _toy_scenario(tiers=[TierProfile(id="A", values={"quality": math.nan})])
        assert any("finite" in i.message for i in validate_scenario(s))

    def test_collects_multiple_issues(self):
        s = _toy_scenario(
            metrics=[
                MetricDef(id="quality", direction=Direction.HIGHER_BETTER, weight=-1.0, units=""),
            ],
            tiers=[],
            lam=2.0,
        )
        issues = validate_scenario(s)
        assert len(issues) >= 3


class TestImmutability:
    def test_types_are_frozen(self, ids_scenario):
        with pytest.raises(dataclasses.FrozenInstanceError):
            ids_scenario.lam = 0.5
        with pytest.raises(dataclasses.FrozenInstanceError):
            ids_scenario.metrics[0].weight = 2.0

    def test_sequences_are_tuples(self, ids_scenario):
        assert isinstance(ids_scenario.metrics, tuple)
        assert isinstance(ids_scenario.tiers, tuple)

    def test_requirement_thresholds_bind_to_fixed_metrics(self):
        from tieropt import THRESHOLD_METRICS

        assert THRESHOLD_METRICS == {
            "max_latency_ms": "latency_p99",
            "min_success": "success_prob",
            "min_quality": "quality",
            "max_cost": "cost_per_task",
        }
