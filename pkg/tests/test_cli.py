"""CLI subcommands: outputs, formats, exit codes."""

import io
import json
from importlib import resources

from tieropt.cli import run

IDS = str(resources.files("tieropt") / "fixtures" / "ids.json")
SUNCATCHER = str(resources.files("tieropt") / "fixtures" / "suncatcher.json")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestEvaluate:
    def test_ids_table(self):
        code, out, err = invoke("evaluate", IDS, "--format", "table")
        assert code == 0
        assert err == ""
        assert "winner: ODC" in out
        assert "No (latency)" in out

    def test_suncatcher_winner(self):
        code, out, err = invoke("evaluate", SUNCATCHER)
        assert code == 0
        assert "winner: GROUND_TPU_DC" in out

    def test_json_byte_stable(self):
        first = invoke("evaluate", IDS, "--format", "json")
        second = invoke("evaluate", IDS, "--format", "json")
        assert first == second
        assert first[0] == 0
        assert json.loads(first[1])["winner"] == "ODC"

    def test_csv(self):
        code, out, err = invoke("evaluate", IDS, "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "tier,metric,score"

    def test_nothing_feasible_exits_1(self, tmp_path):
        doc = json.loads((resources.files("tieropt") / "fixtures" / "ids.json").read_text())
        doc["requirements"]["max_latency_ms"] = 1
        path = tmp_path / "strict.json"
        path.write_text(json.dumps(doc))
        code, out, err = invoke("evaluate", str(path))
        assert code == 1
        assert "winner: none" in out

    def test_unreadable_file_exits_1(self):
        code, out, err = invoke("evaluate", "/no/such/file.json")
        assert code == 1
        assert "/no/such/file.json" in err

    def test_invalid_scenario_exits_1(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{}")
        code, out, err = invoke("evaluate", str(path))
        assert code == 1
        assert "tiers" in err


class TestUsageErrors:
    def test_unknown_flag_exits_2(self):
        code, out, err = invoke("evaluate", IDS, "--bogus")
        assert code == 2
        assert "usage" in err

    def test_unknown_subcommand_exits_2(self):
        code, out, err = invoke("frobnicate", IDS)
        assert code == 2

    def test_bad_format_choice_exits_2(self):
        code, out, err = invoke("evaluate", IDS, "--format", "yaml")
        assert code == 2


class TestExplain:
    def test_feasible_tier_breakdown(self):
        code, out, err = invoke("explain", IDS, "--tier", "ODC")
        assert code == 0
        assert err == ""
        assert "u_base 0.5152" in out
        assert "latency_p99" in out
        assert "data_derived" in out

    def test_infeasible_tier_lists_violations(self):
        code, out, err = invoke("explain", IDS, "--tier", "GSE")
        assert code == 0
        assert "infeasible" in out
        assert "latency_p99 600 > max_latency_ms 250" in out

    def test_unknown_tier_exits_1(self):
        code, out, err = invoke("explain", IDS, "--tier", "NOPE")
        assert code == 1
        assert "NOPE" in err


class TestSweep:
    def test_lambda_sweep(self):
        code, out, err = invoke(
            "sweep", IDS, "--param", "lambda", "--from", "0", "--to", "1", "--steps", "11"
        )
        assert code == 0
        assert err == ""
        assert out.count("winner=ODC") == 11

    def test_cost_threshold_sweep_reports_crossover(self):
        code, out, err = invoke(
            "sweep", SUNCATCHER, "--param", "threshold:max_cost",
            "--from", "10", "--to", "16", "--steps", "7",
        )
        assert code == 0
        assert "GROUND_GPU_DC" in out

    def test_unknown_param_exits_1(self):
        code, out, err = invoke(
            "sweep", IDS, "--param", "weight:nope", "--from", "0", "--to", "1", "--steps", "3"
        )
        assert code == 1
        assert "unknown metric" in err


class TestPareto:
    def test_ids_front(self):
        code, out, err = invoke("pareto", IDS, "--objectives", "latency_p99,energy_per_task")
        assert code == 0
        assert "nondominated:" in out
        assert "FC" in out and "ODC" in out
        assert "infeasible: GSE, TDC" in out

    def test_empty_objectives_exits_1(self):
        code, out, err = invoke("pareto", IDS, "--objectives", ",")
        assert code == 1


class TestValidate:
    def test_valid_fixture_ok(self):
        code, out, err = invoke("validate", IDS)
        assert (code, out, err) == (0, "OK\n", "")

    def test_invalid_file_lists_issues(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"name": "x"}))
        code, out, err = invoke("validate", str(path))
        assert code == 1
        assert "missing required key" in out
