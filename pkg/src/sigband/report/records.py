"""
검증 보고서 레코드와 보고서 모델
"""
from typing import Union

from pydantic import BaseModel, ConfigDict, Field

from ..catalog import DistSpec
from ..coverage import THRESHOLD_EXACT, THRESHOLD_PAPER, ThresholdKind

ParamValue = Union[int, float, str]


class VerificationRecord(BaseModel):
    """
    닫힌 형태 값과 오라클 값의 비교 한 건.

    pass = (abs_diff <= tolerance) AND (exceeds_threshold == expected_exceeds)
    """
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    check: str
    family: str
    params: dict[str, ParamValue] = Field(default_factory=dict)
    coverage_closed: float
    coverage_oracle: float
    abs_diff: float = Field(ge=0.0)
    tolerance: float = Field(ge=0.0)
    exceeds_threshold: bool
    expected_exceeds: bool
    passed: bool = Field(alias="pass")
    note: str = ""

    @classmethod
    def make(
        cls,
        check: str,
        family: str,
        params: dict[str, ParamValue],
        closed: float,
        oracle: float,
        tolerance: float,
        expected_exceeds: bool,
        level: float,
        exceeds: bool | None = None,
        note: str = "",
    ) -> "VerificationRecord":
        """abs_diff, exceeds_threshold, pass 를 계산해 레코드를 만듭니다."""
        abs_diff = abs(closed - oracle)
        if exceeds is None:
            exceeds = closed > level
        return cls(
            check=check,
            family=family,
            params=params,
            coverage_closed=closed,
            coverage_oracle=oracle,
            abs_diff=abs_diff,
            tolerance=tolerance,
            exceeds_threshold=exceeds,
            expected_exceeds=expected_exceeds,
            passed=(abs_diff <= tolerance) and (exceeds == expected_exceeds),
            note=note,
        )

    @classmethod
    def failure(cls, check: str, dist: DistSpec | str, expected_exceeds: bool, note: str) -> "VerificationRecord":
        """계산 자체가 실패한 항목"""
        family = dist if isinstance(dist, str) else dist.family
        params = {} if isinstance(dist, str) else dist.params()
        return cls(
            check=check, family=family, params=params,
            coverage_closed=0.0, coverage_oracle=0.0, abs_diff=0.0, tolerance=0.0,
            exceeds_threshold=False, expected_exceeds=expected_exceeds,
            passed=False, note=note,
        )


class PropertyCheck(BaseModel):
    """
    격자 불변량, 단조성 등 값 하나로 요약되지 않는 검사.

    flagged 는 실패로 치지 않는 관찰 (예: 간격 1 의 Student t 단조성) 입니다.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str = ""
    flagged: bool = False


class ReportSummary(BaseModel):
    records: int = 0
    records_passed: int = 0
    records_failed: int = 0
    checks: int = 0
    checks_passed: int = 0
    checks_failed: int = 0
    flagged: int = 0


class VerificationReport(BaseModel):
    threshold_exact: float = THRESHOLD_EXACT
    threshold_paper: float = THRESHOLD_PAPER
    threshold_kind: ThresholdKind = ThresholdKind.EXACT
    tolerance: float
    seed: int
    samples: int
    records: list[VerificationRecord] = Field(default_factory=list)
    checks: list[PropertyCheck] = Field(default_factory=list)
    summary: ReportSummary = Field(default_factory=ReportSummary)

    def summarize(self) -> "VerificationReport":
        passed = sum(1 for r in self.records if r.passed)
        checks_passed = sum(1 for c in self.checks if c.passed)
        self.summary = ReportSummary(
            records=len(self.records),
            records_passed=passed,
            records_failed=len(self.records) - passed,
            checks=len(self.checks),
            checks_passed=checks_passed,
            checks_failed=len(self.checks) - checks_passed,
            flagged=sum(1 for c in self.checks if c.flagged),
        )
        return self

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records) and all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        lines = [f"{r.check}: {r.family} {r.params} {r.note}".strip() for r in self.records if not r.passed]
        lines += [f"{c.name}: {c.detail}" for c in self.checks if not c.passed]
        return lines
