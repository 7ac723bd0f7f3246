#!/usr/bin/env python3
"""Sensitivity demos on the bundled case studies.

Shows how the selected tier reacts to the missing-data penalty, to the
latency weight, and to a relaxed cost ceiling.
"""

from tieropt import SweepSpec, load_bundled_scenario, sweep


def run(scenario_name: str, parameter: str, lo: float, hi: float, steps: int) -> None:
    scenario = load_bundled_scenario(scenario_name)
    result = sweep(scenario, SweepSpec.from_string(parameter, lo, hi, steps))
    print(f"=== {scenario_name}: sweep {result.parameter} over [{lo}, {hi}] ===")
    for row in result.rows:
        utilities = "  ".join(f"{tid}={u:.4f}" for tid, u in row.u_eff.items())
        print(f"  {row.value:>8.3f}  winner={row.winner or '-':<16} {utilities}")
    if result.crossovers:
        for c in result.crossovers:
            print(
                f"  crossover between {c.lo_value:g} and {c.hi_value:g}: "
                f"{c.winner_before or '-'} -> {c.winner_after or '-'}"
            )
    else:
        print("  no crossover: the selection is insensitive over this range")
    print()


if __name__ == "__main__":
    # Both feasible IDS tiers report every weighted metric (phi = 1), so the
    # penalty parameter cannot reorder them.
    run("ids", "lambda", 0.0, 1.0, 11)
    # Weighting latency hard enough eventually hands the win to the flight computer.
    run("ids", "weight:latency_p99", 0.2, 5.0, 13)
    # The GPU data center enters the feasible set once the cost ceiling reaches 15.
    run("suncatcher", "threshold:max_cost", 10.0, 16.0, 7)
