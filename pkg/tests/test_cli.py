import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from litiquant.cli import main
from litiquant.server import create_app

SCENARIO = {
    "winning_benefit": 10000, "settlement_benefit": 5000, "admin_cost": 1000,
    "bargain_cost": 500, "p_win": 0.6, "q_settle": 0.4, "p_appeal_win": 0.0,
    "filing_cost": 0, "inflation_rate": 0.019, "horizon_years": 0.3333,
    "volatility": 0.25, "currency": "USD",
}


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(SCENARIO))
    return str(path)


def run(*args):
    return CliRunner().invoke(main, list(args))


class TestAnalyzeCommand:
    def test_json_output(self, scenario_file):
        result = run("analyze", scenario_file)
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["bargain"]["reasonable_bargain"] == 4250.0
        assert abs(data["quote"]["fair_bargain"] - 5635.0) <= 5.0

    def test_text_output(self, scenario_file):
        result = run("analyze", scenario_file, "--format", "text")
        assert result.exit_code == 0
        assert "Reasonable bargain" in result.output
        assert "4,250.00" in result.output

    def test_csv_output(self, scenario_file):
        result = run("analyze", scenario_file, "--format", "csv")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].startswith("evc,")
        assert len(lines) == 2

    def test_matches_http_byte_for_byte(self, scenario_file, tmp_path):
        cli_out = run("analyze", scenario_file).output
        client = TestClient(create_app(tmp_path / "store"))
        http_out = client.post("/api/v1/analyze", json=SCENARIO).text
        assert cli_out == http_out

    def test_validation_error_exit_1(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(dict(SCENARIO, p_win=2)))
        result = run("analyze", str(path))
        assert result.exit_code == 1
        assert "p_win" in result.output

    def test_parse_error_exit_1(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops")
        result = run("analyze", str(path))
        assert result.exit_code == 1

    def test_missing_file_exit_1(self):
        result = run("analyze", "/nonexistent/path.json")
        assert result.exit_code == 1


class TestSweepCommand:
    def test_csv_stdout(self, scenario_file):
        result = run("sweep", scenario_file, "--param", "p_win",
                     "--from", "0", "--to", "1", "--steps", "3")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].split(",")[0] == "p_win"
        assert len(lines) == 4

    def test_out_file(self, scenario_file, tmp_path):
        out = tmp_path / "sweep.csv"
        result = run("sweep", scenario_file, "--param", "q_settle",
                     "--from", "0", "--to", "1", "--steps", "5",
                     "--out", str(out))
        assert result.exit_code == 0
        assert out.read_text().splitlines()[0].startswith("q_settle,")

    def test_invalid_param_exit_2(self, scenario_file):
        result = run("sweep", scenario_file, "--param", "zzz",
                     "--from", "0", "--to", "1", "--steps", "3")
        assert result.exit_code == 2


class TestSimulateCommand:
    def test_simulate(self, scenario_file):
        result = run("simulate", scenario_file, "--trials", "20000", "--seed", "5")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["trials"] == 20000 and data["seed"] == 5
        assert data["closed_form"] == 6000.0

    def test_abandon_rule(self, scenario_file):
        result = run("simulate", scenario_file, "--trials", "1000",
                     "--max-rounds", "1", "--terminal", "abandon")
        data = json.loads(result.output)
        assert data["truncated"] == pytest.approx(6000.0 * (1 - 0.4**2))


class TestOptimalCostCommand:
    def test_default(self, scenario_file):
        result = run("optimal-cost", scenario_file)
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert 0.0 < data["lc_star"] < 5500.0

    def test_custom_k(self, scenario_file):
        result = run("optimal-cost", scenario_file, "--k", "0.001")
        data = json.loads(result.output)
        assert 0.0 < data["lc_star"] < 5500.0
