"""
구간 포함 확률 결과 타입과 비교 기준값
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

# 2Φ(1) - 1
THRESHOLD_EXACT = 0.6826894921370859
THRESHOLD_PAPER = 0.6827


class ThresholdKind(str, Enum):
    EXACT = "exact"
    PAPER = "paper"


def threshold(kind: ThresholdKind | str = ThresholdKind.EXACT) -> float:
    return THRESHOLD_EXACT if ThresholdKind(kind) is ThresholdKind.EXACT else THRESHOLD_PAPER


class CoverageMethod(str, Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    SUMMATION = "summation"
    MONTE_CARLO = "monte_carlo"


class CoverageResult(BaseModel):
    """P{X in band} 값과 계산 방법, 절대 오차 추정"""
    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0.0, le=1.0)
    method: CoverageMethod
    err_estimate: float = Field(ge=0.0)

    def exceeds(self, kind: ThresholdKind | str = ThresholdKind.EXACT) -> bool:
        return self.value > threshold(kind)


def clip_probability(value: float) -> float:
    return min(1.0, max(0.0, value))
