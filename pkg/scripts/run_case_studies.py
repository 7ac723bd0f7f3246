#!/usr/bin/env python3
"""Evaluate the two bundled case studies and print rankings plus the
winner's per-metric contribution breakdown."""

from tieropt import evaluate, explain, export_result, load_bundled_scenario


def show(name: str) -> None:
    scenario = load_bundled_scenario(name)
    result = evaluate(scenario)
    print(f"=== {scenario.name} (lambda = {scenario.lam}) ===")
    print(export_result(result, "table"))

    winner = next(t for t in explain(result, scenario).tiers if t.tier_id == result.winner)
    print(f"contributions for {winner.tier_id}:")
    for c in winner.contributions:
        print(
            f"  {c.metric_id:<16} raw {c.raw:>12g}  ->  score {c.score:.4f}"
            f"  x weight {c.weight:g}  =>  {c.contribution:.4f}"
        )
    print(f"  u_base {winner.u_base:.4f}  penalty {winner.penalty:.4f}  u_eff {winner.u_eff:.4f}")
    print()


if __name__ == "__main__":
    show("ids")
    show("suncatcher")
