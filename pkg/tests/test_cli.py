import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from carebridge.cli import main

DEMO_LOG = Path(__file__).parent / "data" / "demo_session_50.log"
GOLDEN = Path(__file__).parent / "data" / "golden_report_2025-06.json"
FIXTURE_GRAPH = Path(__file__).parents[1] / "src" / "carebridge" / "knowledge" / "data" / "graph.tsv"


@pytest.fixture
def runner():
    return CliRunner()


def kv(output):
    pairs = {}
    for line in output.strip().splitlines():
        key, sep, value = line.partition("=")
        if sep:
            pairs[key] = value
    return pairs


class TestLoadGraph:
    def test_fixture_graph_loads(self, runner):
        result = runner.invoke(main, ["load-graph", str(FIXTURE_GRAPH)])
        assert result.exit_code == 0, result.output
        pairs = kv(result.output)
        assert int(pairs["nodes"]) >= 500
        assert pairs["version"] == "1"

    def test_validate_only(self, runner):
        result = runner.invoke(main, ["load-graph", str(FIXTURE_GRAPH), "--validate-only"])
        assert result.exit_code == 0
        assert "surface_forms" not in result.output

    def test_bad_document_fails_with_line(self, runner, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("N\ta\tonly-three-fields\n")
        result = runner.invoke(main, ["load-graph", str(bad)])
        assert result.exit_code != 0
        assert "line 1" in result.output


class TestDemoSession:
    def test_replay_prints_transcript_and_latency(self, runner):
        result = runner.invoke(main, ["demo-session", "--script", str(DEMO_LOG)])
        assert result.exit_code == 0, result.output
        assert "metformin" in result.output
        assert "sidebar:" in result.output
        pairs = kv(result.output)
        assert pairs["chunks"] == "50"
        assert float(pairs["latency_p100_ms"]) < 1400

    def test_replay_is_deterministic(self, runner):
        a = runner.invoke(main, ["demo-session", "--script", str(DEMO_LOG)]).output
        b = runner.invoke(main, ["demo-session", "--script", str(DEMO_LOG)]).output
        # latency lines vary; the transcript block must be byte-identical
        cut = a.index("chunks=")
        assert a[:cut] == b[:cut]


class TestReport:
    def test_demo_month_matches_golden(self, runner):
        result = runner.invoke(main, ["report", "--month", "2025-06"])
        assert result.exit_code == 0, result.output
        assert result.output == GOLDEN.read_text("utf-8")

    def test_open_month_requires_preview(self, runner):
        result = runner.invoke(main, ["report", "--month", "2099-01"])
        assert result.exit_code != 0
        assert "preview" in result.output


class TestEval:
    def test_t_test(self, runner):
        result = runner.invoke(
            main, ["eval", "t-test", "--summary", "32.8,6.5,20,32.2,4.9,20"]
        )
        assert result.exit_code == 0, result.output
        pairs = kv(result.output)
        assert 0.70 <= float(pairs["p_two_sided"]) <= 0.78

    def test_mannwhitney(self, runner):
        result = runner.invoke(main, ["eval", "mannwhitney", "--a", "1,2,3", "--b", "4,5,6"])
        pairs = kv(result.output)
        assert float(pairs["U"]) == 0.0
        assert pairs["method"] == "exact"

    def test_sus(self, runner):
        result = runner.invoke(
            main, ["eval", "sus", "--responses", "4.8,1.2,4.5,1.2,4.6,1.0,4.6,1.2,4.6,1.1"]
        )
        assert float(kv(result.output)["sus"]) == pytest.approx(93.5, abs=0.1)

    def test_rubric(self, runner):
        result = runner.invoke(main, ["eval", "rubric", "--scores", "100,0,0,0"])
        assert float(kv(result.output)["rubric"]) == 40.0

    def test_split(self, runner):
        result = runner.invoke(main, ["eval", "split", "--scores", "10,9,8,7"])
        pairs = kv(result.output)
        assert pairs["group0_mean"] == pairs["group1_mean"] == "8.5"

    def test_bad_input_is_a_clean_error(self, runner):
        result = runner.invoke(main, ["eval", "t-test", "--summary", "1,2"])
        assert result.exit_code != 0
        assert "Error" in result.output
