"""Command-line front door: batch evaluation, explanations, sweeps,
Pareto analysis, scenario validation, and launching the HTTP service.

Exit codes: 0 on success, 1 when the scenario is unreadable/invalid or no
tier is feasible, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import IO, Optional, Sequence

from .analysis import AnalysisError, SweepSpec, explain, pareto_front, sweep
from .model import Scenario, ScenarioValidationError
from .scenario_io import EXPORT_FORMATS, ScenarioParseError, export_result, parse_scenario
from .scoring import evaluate


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Route argparse errors through our streams with exit code 2.
    def error(self, message: str):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="tieropt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score a scenario and print the ranking")
    p.add_argument("scenario", help="path to a scenario JSON file")
    p.add_argument("--format", choices=EXPORT_FORMATS, default="table")

    p = sub.add_parser("explain", help="print a tier's per-metric contribution breakdown")
    p.add_argument("scenario")
    p.add_argument("--tier", required=True, help="tier id to explain")

    p = sub.add_parser("sweep", help="re-evaluate across a parameter range")
    p.add_argument("scenario")
    p.add_argument("--param", required=True,
                   help="lambda, weight:<metric-id>, or threshold:<requirement>")
    p.add_argument("--from", dest="lo", type=float, required=True)
    p.add_argument("--to", dest="hi", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("pareto", help="print the nondominated tiers over raw objectives")
    p.add_argument("scenario")
    p.add_argument("--objectives", required=True, help="comma-separated metric ids")

    p = sub.add_parser("validate", help="check a scenario file against every invariant")
    p.add_argument("scenario")

    p = sub.add_parser("serve", help="start the HTTP evaluation service")
    p.add_argument("--port", type=int, default=None, help="default: $PORT or 8000")
    p.add_argument("--scenarios", default=None,
                   help="scenario directory (default: $SCENARIO_DIR or bundled fixtures)")
    return parser


def _load(path: str) -> Scenario:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise _DataError(f"cannot read scenario file {path}: {exc.strerror}") from None
    return parse_scenario(data)


class _DataError(Exception):
    pass


def _cmd_evaluate(args, out: IO[str]) -> int:
    result = evaluate(_load(args.scenario))
    out.write(export_result(result, args.format))
    return 0 if result.winner is not None else 1


def _cmd_explain(args, out: IO[str]) -> int:
    scenario = _load(args.scenario)
    if all(t.id != args.tier for t in scenario.tiers):
        raise _DataError(f"unknown tier {args.tier!r} in {args.scenario}")
    result = evaluate(scenario)
    report = next(t for t in explain(result, scenario).tiers if t.tier_id == args.tier)

    if not report.feasible:
        out.write(f"tier {args.tier}: infeasible\n")
        for v in report.violations:
            out.write(f"  {v.reason}\n")
        return 0
    out.write(f"tier {args.tier}: feasible\n")
    header = ("metric", "raw", "bounds", "score", "weight", "contribution")
    rows = [
        (
            c.metric_id,
            f"{c.raw:g}",
            f"[{c.bounds.lo:g}, {c.bounds.hi:g}] {c.bounds.source.value}",
            f"{c.score:.4f}",
            f"{c.weight:g}",
            f"{c.contribution:.4f}",
        )
        for c in report.contributions
    ]
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i]) for i in range(6)]
    out.write("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() + "\n")
    u_base = "--" if report.u_base is None else f"{report.u_base:.4f}"
    out.write(
        f"u_base {u_base}  phi {report.phi:.4f}  penalty {report.penalty:.4f}"
        f"  u_eff {report.u_eff:.4f}\n"
    )
    for w in report.warnings:
        out.write(f"warning: {w}\n")
    return 0


def _cmd_sweep(args, out: IO[str]) -> int:
    scenario = _load(args.scenario)
    spec = SweepSpec.from_string(args.param, args.lo, args.hi, args.steps)
    result = sweep(scenario, spec)
    out.write(f"sweep {result.parameter} over [{args.lo:g}, {args.hi:g}] in {args.steps} steps\n")
    for row in result.rows:
        utilities = "  ".join(f"{tid}={u:.4f}" for tid, u in row.u_eff.items())
        out.write(f"{row.value:>10.4f}  winner={row.winner or '-'}  {utilities}".rstrip() + "\n")
    for c in result.crossovers:
        out.write(
            f"crossover between {c.lo_value:g} and {c.hi_value:g}: "
            f"{c.winner_before or '-'} -> {c.winner_after or '-'}\n"
        )
    return 0


def _cmd_pareto(args, out: IO[str]) -> int:
    scenario = _load(args.scenario)
    objectives = [o.strip() for o in args.objectives.split(",") if o.strip()]
    result = pareto_front(scenario, objectives)
    out.write(f"objectives: {', '.join(result.objectives)}\n")
    out.write(f"nondominated: {', '.join(result.nondominated) or '-'}\n")
    for tier_id, witness in result.dominated.items():
        out.write(f"dominated: {tier_id} (by {witness})\n")
    if result.excluded:
        out.write(f"excluded (missing an objective): {', '.join(result.excluded)}\n")
    if result.infeasible:
        out.write(f"infeasible: {', '.join(result.infeasible)}\n")
    return 0


def _cmd_validate(args, out: IO[str]) -> int:
    try:
        _load(args.scenario)
    except ScenarioParseError as exc:
        for issue in exc.issues:
            out.write(f"{issue}\n")
        return 1
    out.write("OK\n")
    return 0


def _cmd_serve(args, out: IO[str]) -> int:
    import uvicorn

    from .service import create_app

    port = args.port if args.port is not None else int(os.environ.get("PORT", "8000"))
    scenario_dir = args.scenarios if args.scenarios is not None else os.environ.get("SCENARIO_DIR")
    app = create_app(Path(scenario_dir) if scenario_dir else None)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
    return 0


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "explain": _cmd_explain,
    "sweep": _cmd_sweep,
    "pareto": _cmd_pareto,
    "validate": _cmd_validate,
    "serve": _cmd_serve,
}


def run(argv: Sequence[str], out: Optional[IO[str]] = None, err: Optional[IO[str]] = None) -> int:
    """Execute one CLI invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(str(exc) + "\n")
        return 2
    try:
        return _COMMANDS[args.command](args, out)
    except _DataError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (ScenarioParseError, ScenarioValidationError) as exc:
        err.write(f"error: invalid scenario {args.scenario}\n")
        for issue in exc.issues:
            err.write(f"  {issue}\n")
        return 1
    except AnalysisError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
