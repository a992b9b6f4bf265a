import json
import math
from pathlib import Path

import numpy as np
import pytest

from dcecon import reference
from dcecon.cli import main

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

FAST = ["--max-iters", "1500"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_unknown_subcommand_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "maximize-vibes")
        assert code == 1
        assert "usage error" in err

    def test_missing_required_flag_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "cost-min")
        assert code == 1

    def test_malformed_input_is_data_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("year,new_server_cost,power_cooling_cost\n1997,sixty,5\n")
        code, _, err = run_cli(capsys, "cost-min", "--input", str(bad), *FAST)
        assert code == 2
        assert "data error" in err

    def test_missing_file_is_data_error(self, tmp_path, capsys):
        code, _, _ = run_cli(capsys, "cost-min", "--input", str(tmp_path / "nope.csv"))
        assert code == 2

    def test_degenerate_problem_is_numerical_error(self, capsys):
        code, _, err = run_cli(
            capsys, "profit-max-closed", "--w1", "1", "--w2", "1",
            "--recurring", "1", "--infrastructure", "1", "--alpha", "0.7", "--beta", "0.6")
        assert code == 3
        assert "numerical error" in err

    def test_success_is_zero(self, capsys):
        code, out, _ = run_cli(capsys, "hhi", "--input", str(DATA_DIR / "apac_shares.csv"))
        assert code == 0
        assert out


class TestOptimizerCommands:
    def test_cost_min_json(self, capsys):
        code, out, _ = run_cli(capsys, "cost-min", "--input", str(DATA_DIR / "tables.csv"),
                               "--seed", "3", *FAST)
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "cost_min"
        assert len(payload["rows"]) == 4
        assert payload["config"]["seed"] == 3

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "cost-min", "--input", str(DATA_DIR / "tables.csv"),
                               "--format", "csv", *FAST)
        assert code == 0
        assert out.splitlines()[0].startswith("year,alpha,beta,min_cost")

    def test_mode_changes_trajectory(self, capsys):
        _, out_marginal, _ = run_cli(capsys, "cost-min", "--input", str(DATA_DIR / "tables.csv"),
                                     "--mode", "marginal", "--seed", "1", *FAST)
        _, out_analytic, _ = run_cli(capsys, "cost-min", "--input", str(DATA_DIR / "tables.csv"),
                                     "--mode", "analytic", "--seed", "1", *FAST)
        rows_m = json.loads(out_marginal)["rows"]
        rows_a = json.loads(out_analytic)["rows"]
        assert rows_m != rows_a

    def test_profit_reference_mode_matches_reference_table(self, capsys):
        code, out, _ = run_cli(capsys, "profit", "--input", str(DATA_DIR / "tables.csv"),
                               "--reference")
        assert code == 0
        payload = json.loads(out)
        expected = reference.reference_profit_rows()
        for row in payload["rows"]:
            year = row.pop("year")
            assert row == pytest.approx(expected[year])

    def test_profit_with_explicit_weights(self, capsys):
        code, out, _ = run_cli(capsys, "profit", "--input", str(DATA_DIR / "tables.csv"),
                               "--weights", str(DATA_DIR / "linear_weights.csv"), *FAST)
        assert code == 0
        payload = json.loads(out)
        for row in payload["rows"]:
            w1, w2, _ = reference.LINEAR_COST_TABLE[row["year"]]
            record = reference.COST_RECORDS[row["year"]]
            assert row["min_cost_linear"] == pytest.approx(
                w1 * record.server_cost + w2 * record.power_cooling_cost)

    def test_trace_writes_files(self, tmp_path, capsys):
        code, _, _ = run_cli(capsys, "revenue-max", "--input", str(DATA_DIR / "tables.csv"),
                             "--trace", str(tmp_path), *FAST)
        assert code == 0
        assert (tmp_path / "revenue_max_1997.csv").exists()
        header = (tmp_path / "revenue_max_1997.csv").read_text().splitlines()[0]
        assert header == "iteration,alpha,beta,objective"


class TestClosedFormCommands:
    def test_revenue_max_closed(self, capsys):
        code, out, _ = run_cli(capsys, "revenue-max-closed", "--budget", "6", "--w1", "1",
                               "--w2", "2", "--recurring", "2", "--infrastructure", "1",
                               "--alpha", "2", "--beta", "1")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["A"] == pytest.approx(2.0)
        assert row["objective"] == pytest.approx(16.0)

    def test_cost_min_closed_with_rd_backout(self, capsys):
        code, out, _ = run_cli(capsys, "cost-min-closed", "--target-output", "16",
                               "--w1", "1", "--w2", "4", "--recurring", "1",
                               "--infrastructure", "1", "--alpha", "0.5", "--beta", "0.5",
                               "--discount-rate", "1.05", "--harrod-capital", "3",
                               "--solow-labor", "6", "--alpha1", "0.4", "--beta1", "0.3")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["objective"] == pytest.approx(64.0)
        assert row["L_star"] > 0 and row["K_star"] > 0

    def test_partial_rd_flags_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "cost-min-closed", "--target-output", "16",
                             "--w1", "1", "--w2", "4", "--recurring", "1",
                             "--infrastructure", "1", "--alpha", "0.5", "--beta", "0.5",
                             "--discount-rate", "1.05")
        assert code == 1

    def test_profit_max_closed(self, capsys):
        code, out, _ = run_cli(capsys, "profit-max-closed", "--w1", "1", "--w2", "1",
                               "--recurring", "1", "--infrastructure", "1",
                               "--alpha", "0.25", "--beta", "0.25")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["output"] == pytest.approx(0.25)
        assert row["profit"] == pytest.approx(0.125)


class TestSfaCommand:
    def test_recovery_mode(self, capsys):
        y = math.exp(0.5 + 0.3 * math.log(58) + 0.7 * math.log(30) + 0.05 - 0.2)
        code, out, _ = run_cli(capsys, "sfa", "--S", "58", "--I", "30",
                               "--intercept", "0.5", "--shock", "0.05",
                               "--inefficiency", "0.2", "--output", str(y))
        assert code == 0
        summary = json.loads(out)["summary"]
        assert summary["alpha"] == pytest.approx(0.3, abs=1e-9)
        assert summary["beta"] == pytest.approx(0.7, abs=1e-9)

    def test_recovery_singular_inputs_is_numerical_error(self, capsys):
        code, _, _ = run_cli(capsys, "sfa", "--S", "30", "--I", "30", "--output", "5")
        assert code == 3

    def test_synthesis_mode_is_seeded(self, capsys):
        args = ("sfa", "--S", "9", "--I", "16", "--alpha", "0.4", "--beta", "0.6",
                "--sigma-v", "0.2", "--sigma-u", "0.1", "--synthesize", "5",
                "--seed", "11")
        code, first, _ = run_cli(capsys, *args)
        assert code == 0
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        rows = json.loads(first)["rows"]
        assert len(rows) == 5
        for row in rows:
            assert row["u"] >= 0
            assert row["efficiency"] == pytest.approx(math.exp(-row["u"]))

    def test_synthesis_needs_elasticities(self, capsys):
        code, _, _ = run_cli(capsys, "sfa", "--S", "9", "--I", "16", "--synthesize", "5")
        assert code == 1


class TestFitCommand:
    def make_csv(self, tmp_path, intercept=0.8, alpha=0.3, beta=0.5, noise=0.0, n=12):
        rng = np.random.default_rng(42)
        S = rng.uniform(5, 80, size=n)
        P = rng.uniform(5, 80, size=n)
        y = np.exp(intercept + alpha * np.log(S) + beta * np.log(P)
                   + rng.normal(0, noise, size=n))
        path = tmp_path / "fit.csv"
        lines = ["new_server_cost,power_cooling_cost,output"]
        lines += [f"{s},{p},{v}" for s, p, v in zip(S, P, y)]
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_ols_fit_recovers_coefficients(self, tmp_path, capsys):
        path = self.make_csv(tmp_path)
        code, out, _ = run_cli(capsys, "fit", "--input", str(path))
        assert code == 0
        summary = json.loads(out)["summary"]
        assert summary["intercept"] == pytest.approx(0.8, abs=1e-8)
        assert summary["alpha"] == pytest.approx(0.3, abs=1e-8)
        assert summary["beta"] == pytest.approx(0.5, abs=1e-8)
        assert summary["r_squared"] == pytest.approx(1.0)

    def test_constrained_fit_hits_scale_boundary(self, tmp_path, capsys):
        path = self.make_csv(tmp_path, alpha=0.9, beta=0.6, noise=0.02)
        code, out, _ = run_cli(capsys, "fit", "--input", str(path),
                               "--constrained", str(DATA_DIR / "constraints_rts.csv"))
        assert code == 0
        summary = json.loads(out)["summary"]
        assert summary["alpha"] + summary["beta"] == pytest.approx(1.0, abs=1e-8)

    def test_raw_scale_fit(self, tmp_path, capsys):
        path = tmp_path / "raw.csv"
        rows = ["new_server_cost,power_cooling_cost,output"]
        rng = np.random.default_rng(7)
        for _ in range(10):
            x1, x2 = rng.uniform(1, 50), rng.uniform(1, 50)
            rows.append(f"{x1},{x2},{2.0 + 3.0 * x1 + 4.0 * x2}")
        path.write_text("\n".join(rows) + "\n")
        code, out, _ = run_cli(capsys, "fit", "--input", str(path), "--scale", "raw")
        assert code == 0
        summary = json.loads(out)["summary"]
        assert summary["alpha"] == pytest.approx(3.0, abs=1e-8)
        assert summary["beta"] == pytest.approx(4.0, abs=1e-8)

    def test_missing_target_column_is_data_error(self, tmp_path, capsys):
        path = self.make_csv(tmp_path)
        code, _, _ = run_cli(capsys, "fit", "--input", str(path), "--target", "profit")
        assert code == 2


class TestHhiCommand:
    def test_apac_shares(self, capsys):
        code, out, _ = run_cli(capsys, "hhi", "--input", str(DATA_DIR / "apac_shares.csv"))
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["hhi"] == pytest.approx(1708.0)
        assert payload["summary"]["classification"] == "moderate"
        assert len(payload["rows"]) == 8

    def test_excluded_entries_do_not_contribute(self, tmp_path, capsys):
        path = tmp_path / "s.csv"
        path.write_text("firm,share_percent,included\na,50,true\nb,50,false\n")
        code, out, _ = run_cli(capsys, "hhi", "--input", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["hhi"] == pytest.approx(2500.0)

    def test_bad_header_is_data_error(self, tmp_path, capsys):
        path = tmp_path / "s.csv"
        path.write_text("name,pct\na,50\n")
        code, _, _ = run_cli(capsys, "hhi", "--input", str(path))
        assert code == 2
