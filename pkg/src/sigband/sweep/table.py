"""
스윕 결과 표
"""
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from ..coverage import BandVariant, ThresholdKind, threshold


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    param: float
    coverage: float = Field(ge=0.0, le=1.0)
    excess: float


class SweepTable(BaseModel):
    """격자 순서의 SweepRow 목록과 스윕 조건"""
    family: str
    param: str
    variant: BandVariant = BandVariant.PLAIN
    fixed: dict[str, Any] = Field(default_factory=dict)
    threshold_kind: ThresholdKind = ThresholdKind.EXACT
    title: str = ""
    rows: list[SweepRow] = Field(default_factory=list)

    @property
    def threshold(self) -> float:
        return threshold(self.threshold_kind)

    def params(self) -> list[float]:
        return [row.param for row in self.rows]

    def coverages(self) -> list[float]:
        return [row.coverage for row in self.rows]

    def nearest(self, param: float) -> SweepRow:
        """param 에 가장 가까운 행"""
        return min(self.rows, key=lambda row: abs(row.param - param))

    def min_row(self) -> SweepRow:
        return min(self.rows, key=lambda row: row.coverage)

    def __len__(self) -> int:
        return len(self.rows)
