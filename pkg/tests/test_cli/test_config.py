"""
Tests de la configuración de corrida y del reporte.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.cli import SUITES, CheckRecord, CheckStatus, Report, RunConfig, emit, parse_range, print_summary
from src.errors import InvalidConfig, IoFailure


class TestParseRange:
    """Tests de la lectura de rangos de parámetros."""

    def test_single_value(self):
        assert parse_range(3) == [3]
        assert parse_range("4") == [4]

    def test_inclusive_range(self):
        assert parse_range("2..5") == [2, 3, 4, 5]

    def test_empty_range(self):
        assert parse_range("3..2") == []

    def test_list(self):
        assert parse_range([2, 3]) == [2, 3]

    def test_non_positive(self):
        with pytest.raises(ValueError):
            parse_range("0..2")


class TestRunConfig:
    """Tests de validación de RunConfig."""

    def test_defaults(self):
        config = RunConfig.build()
        assert config.parameters() == [(2, 3, 3)]
        assert config.suites == list(SUITES)
        assert config.format == "json"

    def test_ranges_and_suites(self):
        config = RunConfig.build(q="2..3", n=3, r="3..4", suites="counting,weight")
        assert len(config.parameters()) == 4
        assert config.suites == ["weight", "counting"]

    def test_all_suites(self):
        assert RunConfig.build(suites="all").suites == list(SUITES)

    def test_none_values_use_defaults(self):
        assert RunConfig.build(seed=None).seed == RunConfig.build().seed

    @pytest.mark.parametrize(
        "values",
        [
            {"q": 6},
            {"suites": "unknown"},
            {"workers": 0},
            {"seed": -1},
            {"n": "0..2"},
            {"format": "xml"},
            {"colour": True},
        ],
    )
    def test_invalid(self, values):
        with pytest.raises(InvalidConfig):
            RunConfig.build(**values)

    def test_echo_omits_progress(self):
        echo = RunConfig.build(show_progress=True).echo()
        assert "show_progress" not in echo
        assert echo["q"] == [2]


class TestReport:
    """Tests del armado y la serialización del reporte."""

    def setup_method(self):
        self.records = [
            CheckRecord(
                check_id="counting.total[q=2,n=3,r=3]",
                suite="counting",
                parameters={"q": 2, "n": 3, "r": 3},
                expected=126,
                observed=126,
                status=CheckStatus.PASS,
            ),
            CheckRecord(
                check_id="census[q=2,n=2,r=3]",
                suite="census",
                parameters={"q": 2, "n": 2, "r": 3},
                status=CheckStatus.SKIPPED,
                reason="se requiere 3 <= r <= n",
            ),
        ]

    def test_summary(self):
        report = Report.assemble("1.0.0", {}, self.records)
        assert report.summary.total == 2
        assert report.summary.passed == 1
        assert report.summary.skipped == 1
        assert report.success

    def test_duplicate_ids(self):
        with pytest.raises(ValueError):
            Report.assemble("1.0.0", {}, self.records + self.records[:1])

    def test_json_round_trip(self):
        report = Report.assemble("1.0.0", {"seed": 1}, self.records)
        parsed = Report.model_validate_json(emit(report, "json"))
        assert parsed.schema_version == "1.0"
        assert parsed.summary == report.summary
        assert [c.check_id for c in parsed.checks] == [c.check_id for c in report.checks]

    def test_csv_rows(self):
        report = Report.assemble("1.0.0", {}, self.records)
        lines = emit(report, "csv").strip().split("\n")
        assert len(lines) == len(self.records) + 1
        assert lines[0].startswith("check_id,suite,parameters")

    def test_writes_file(self, tmp_path):
        report = Report.assemble("1.0.0", {}, self.records)
        path = tmp_path / "out" / "report.json"
        emit(report, "json", path)
        assert path.read_text(encoding="utf-8").startswith("{")

    def test_io_failure(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding="utf-8")
        report = Report.assemble("1.0.0", {}, self.records)
        with pytest.raises(IoFailure):
            emit(report, "json", blocker / "report.json")

    def test_print_summary(self):
        text = print_summary(Report.assemble("1.0.0", {}, self.records))
        assert "[OK  ] counting.total[q=2,n=3,r=3]" in text
        assert "[SKIP]" in text
