"""검증 레코드, 보고서 모델, CSV / SVG / JSON 출력 단위 테스트"""

import json
from collections import Counter

import pytest

from sigband.catalog import Laplace, Poisson, get_family_registry
from sigband.config import get_numeric_config
from sigband.coverage import THRESHOLD_EXACT, BandVariant, ThresholdKind
from sigband.errors import ReportIOError
from sigband.report import (
    CSV_HEADER,
    MC_CSV_HEADER,
    PropertyCheck,
    VerificationRecord,
    VerificationReport,
    VerificationSuite,
    estimate_to_csv,
    load_report,
    table_to_csv,
    table_to_svg,
    write_csv,
    write_estimate_csv,
    write_report,
    write_svg,
)
from sigband.oracle import McEstimate, j_enumeration
from sigband.report.suite import CONTINUOUS_CASES
from sigband.sweep import sweep_family
from sigband.sweep.table import SweepRow


@pytest.fixture
def weibull_table():
    return sweep_family("weibull", "k", [1.0, 2.0, 3.0], fixed={"lambda": 1.0})


def make_record(closed=0.75, oracle=0.75, tolerance=1e-9, expected=True):
    return VerificationRecord.make(
        "closed form vs quadrature", "laplace", {"mu": 0.0, "b": 1.0},
        closed, oracle, tolerance, expected, THRESHOLD_EXACT,
    )


class TestVerificationRecord:
    """레코드 판정 테스트"""

    def test_pass(self):
        record = make_record()
        assert record.passed
        assert record.exceeds_threshold
        assert record.abs_diff == 0.0

    def test_fails_on_difference(self):
        record = make_record(oracle=0.75 + 1e-6)
        assert record.abs_diff == pytest.approx(1e-6)
        assert not record.passed

    def test_fails_on_unexpected_side(self):
        record = make_record(closed=0.6, oracle=0.6)
        assert not record.exceeds_threshold
        assert not record.passed

    def test_explicit_exceeds(self):
        record = VerificationRecord.make(
            "monte carlo counterexample", "compound_poisson_uniform", {"n": 100},
            0.616, 0.617, 0.01, False, THRESHOLD_EXACT, exceeds=False,
        )
        assert record.passed

    def test_failure(self):
        record = VerificationRecord.failure("closed form vs quadrature", Laplace(), True, "boom")
        assert record.family == "laplace"
        assert record.params == {"mu": 0.0, "b": 1.0}
        assert not record.passed
        assert record.note == "boom"

    def test_dumps_pass_alias(self):
        data = json.loads(make_record().model_dump_json(by_alias=True))
        assert data["pass"] is True
        assert "passed" not in data


class TestVerificationReport:
    """보고서 요약 테스트"""

    def test_summary(self):
        report = VerificationReport(
            tolerance=1e-9, seed=42, samples=100_000,
            records=[make_record(), make_record(oracle=0.8)],
            checks=[
                PropertyCheck(name="monotone", passed=True),
                PropertyCheck(name="step one", passed=True, flagged=True),
                PropertyCheck(name="grid", passed=False, detail="min 0.6"),
            ],
        ).summarize()
        summary = report.summary
        assert (summary.records, summary.records_passed, summary.records_failed) == (2, 1, 1)
        assert (summary.checks, summary.checks_passed, summary.checks_failed) == (3, 2, 1)
        assert summary.flagged == 1
        assert not report.all_passed
        failures = report.failures()
        assert len(failures) == 2
        assert failures[1] == "grid: min 0.6"

    def test_all_passed(self):
        report = VerificationReport(tolerance=1e-9, seed=1, samples=10_000, records=[make_record()]).summarize()
        assert report.all_passed
        assert report.failures() == []

    def test_printed_values_section(self):
        suite = VerificationSuite(get_numeric_config())
        suite.verify_printed_values()
        assert len(suite.records) == 8
        assert all(record.passed for record in suite.records)

    def test_continuous_cases_per_family(self):
        """밀도가 있는 연속 계열마다 7개 점"""
        families = {
            info["name"] for info in get_family_registry().get_family_info()
            if not info["lattice"] and info["name"] != "compound_poisson_uniform"
        }
        counts = Counter(text.partition(":")[0] for text, _, _ in CONTINUOUS_CASES)
        assert set(counts) == families
        assert all(count >= 7 for count in counts.values())

    @pytest.mark.integration
    def test_continuous_section(self):
        suite = VerificationSuite(get_numeric_config())
        suite.verify_continuous()
        assert len(suite.records) == len(CONTINUOUS_CASES)
        failed = [f"{r.family} {r.params} {r.abs_diff:.2e}" for r in suite.records if not r.passed]
        assert failed == []

    def test_figure_minimum_against_enumeration(self):
        suite = VerificationSuite(get_numeric_config())
        table = sweep_family("poisson", "lambda", [1.0, 3.0, 10.0], variant="poisson-corrected")
        low = table.min_row()
        record = suite._figure_minimum("figure 9 minimum", table, low, True)
        expected = j_enumeration(Poisson(lam=low.param), BandVariant.POISSON_CORRECTED).value
        assert record.coverage_oracle == expected
        assert record.coverage_closed == low.coverage
        assert record.tolerance == suite.config.tol
        assert "summation oracle" in record.note
        assert record.passed

    def test_figure_minimum_detects_wrong_value(self):
        suite = VerificationSuite(get_numeric_config())
        table = sweep_family("poisson", "lambda", [1.0, 3.0, 10.0], variant="poisson-corrected")
        low = table.min_row()
        shifted = SweepRow(param=low.param, coverage=low.coverage - 1e-6, excess=low.excess - 1e-6)
        record = suite._figure_minimum("figure 9 minimum", table, shifted, True)
        assert record.abs_diff == pytest.approx(1e-6, rel=1e-3)
        assert not record.passed

    def test_figure_minimum_against_quadrature(self):
        suite = VerificationSuite(get_numeric_config())
        table = sweep_family("beta", "beta", [1.0, 2.0, 20.0], fixed={"alpha": 2.0})
        low = table.min_row()
        record = suite._figure_minimum("figure 1 dip", table, low, False)
        assert record.params == {"alpha": 2.0, "beta": low.param}
        assert "quadrature oracle" in record.note
        assert record.abs_diff <= suite.config.tol
        assert record.passed

    def test_paper_threshold_level(self):
        suite = VerificationSuite(get_numeric_config(threshold="paper"))
        assert suite.level == 0.6827


class TestWriters:
    """CSV / SVG / JSON 출력 테스트"""

    def test_csv_format(self, weibull_table):
        text = table_to_csv(weibull_table)
        lines = text.split("\n")
        assert lines[0] == ",".join(CSV_HEADER) == "param,coverage,excess"
        assert lines[-1] == ""
        assert len(lines) == 5
        assert "\r" not in text
        param, coverage, excess = lines[3].split(",")
        assert float(param) == 3.0
        assert float(coverage) == weibull_table.rows[2].coverage
        assert float(excess) == weibull_table.rows[2].excess

    def test_estimate_csv(self, temp_output_dir):
        dist = Poisson(lam=3.0)
        est = McEstimate(estimate=0.1 + 0.2, stderr=1e-3 / 3.0, n_samples=10_000, seed=9, hits=3000)
        text = estimate_to_csv(dist, est)
        header, row, tail = text.split("\n")
        assert header == ",".join(MC_CSV_HEADER)
        assert tail == ""
        fields = row.split(",")
        assert fields[:5] == ["poisson", "lambda=3", "10000", "9", "3000"]
        assert fields[5] == "0.30000000000000004"
        assert float(fields[6]) == est.stderr
        assert float(fields[7]) == est.lower_99
        assert float(fields[8]) == est.upper_99
        path = write_estimate_csv(dist, est, temp_output_dir / "mc.csv")
        assert path.read_text(encoding="utf-8") == text

    def test_write_csv(self, weibull_table, temp_output_dir):
        path = write_csv(weibull_table, temp_output_dir / "nested" / "weibull.csv")
        assert path.read_text(encoding="utf-8") == table_to_csv(weibull_table)

    def test_svg(self, weibull_table, temp_output_dir):
        text = table_to_svg(weibull_table)
        assert text.startswith("<svg")
        assert "<polyline" in text
        assert text.rstrip().endswith("</svg>")
        path = write_svg(weibull_table, temp_output_dir / "weibull.svg")
        assert path.read_text(encoding="utf-8") == text

    def test_report_roundtrip(self, temp_output_dir):
        report = VerificationReport(
            threshold_kind=ThresholdKind.PAPER, tolerance=1e-9, seed=42, samples=100_000,
            records=[make_record()], checks=[PropertyCheck(name="monotone", passed=True)],
        ).summarize()
        path = write_report(report, temp_output_dir / "report.json")
        text = path.read_text(encoding="utf-8")
        assert text.endswith("}\n")
        assert '"pass": true' in text
        assert load_report(path) == report

    def test_write_into_file_parent(self, weibull_table, temp_output_dir):
        blocker = temp_output_dir / "blocker"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(ReportIOError):
            write_csv(weibull_table, blocker / "out.csv")

    def test_load_missing(self, temp_output_dir):
        with pytest.raises(ReportIOError):
            load_report(temp_output_dir / "missing.json")
