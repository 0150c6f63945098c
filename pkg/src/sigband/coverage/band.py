"""
σ-구간과 끝점 처리 변형
"""
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from ..catalog import DistSpec
from ..errors import DomainError, IncompatibleVariantError

# 끝점 정수 판정의 상대/절대 허용 오차
ENDPOINT_RTOL = 1e-12
ENDPOINT_ATOL = 1e-12


class BandVariant(str, Enum):
    PLAIN = "plain"
    GEOMETRIC_CORRECTED = "geometric-corrected"
    NB_CORRECTED = "nb-corrected"
    POISSON_CORRECTED = "poisson-corrected"


class LowerKind(str, Enum):
    CLOSED = "closed"
    OPEN = "open"
    FLOORED = "floored"


class UpperKind(str, Enum):
    CLOSED = "closed"
    CEILED = "ceiled"


VARIANT_KINDS = {
    BandVariant.PLAIN: (LowerKind.CLOSED, UpperKind.CLOSED),
    BandVariant.GEOMETRIC_CORRECTED: (LowerKind.OPEN, UpperKind.CLOSED),
    BandVariant.NB_CORRECTED: (LowerKind.FLOORED, UpperKind.CLOSED),
    BandVariant.POISSON_CORRECTED: (LowerKind.FLOORED, UpperKind.CEILED),
}

# 계열별 보정 변형 (sweep 와 check 의 기본값)
CORRECTED_VARIANT = {
    "geometric": BandVariant.GEOMETRIC_CORRECTED,
    "negbinomial": BandVariant.NB_CORRECTED,
    "poisson": BandVariant.POISSON_CORRECTED,
}


class Band(BaseModel):
    """
    평균 ∓ 표준편차 구간.

    floored / ceiled 끝점은 이미 정수로 내림/올림한 값을 담습니다.
    """
    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    lo_kind: LowerKind = LowerKind.CLOSED
    hi_kind: UpperKind = UpperKind.CLOSED
    mean: float
    sd: float

    @model_validator(mode="after")
    def _check_order(self):
        if not self.lo < self.hi:
            raise ValueError(f"band lower end {self.lo} must be below upper end {self.hi}")
        return self

    @property
    def variant(self) -> BandVariant:
        for variant, kinds in VARIANT_KINDS.items():
            if kinds == (self.lo_kind, self.hi_kind):
                return variant
        raise ValueError(f"no variant for {self.lo_kind}/{self.hi_kind}")

    def describe(self) -> str:
        left = "(" if self.lo_kind is LowerKind.OPEN else "["
        return f"{left}{self.lo:.10g}, {self.hi:.10g}]"


def endpoint_slack(value: float) -> float:
    return max(ENDPOINT_ATOL, abs(value) * ENDPOINT_RTOL)


def band(dist: DistSpec, variant: BandVariant | str = BandVariant.PLAIN) -> Band:
    """
    분포의 σ-구간을 만듭니다.

    Raises:
        IncompatibleVariantError: 연속 계열에 보정 변형을 요청한 경우
    """
    variant = BandVariant(variant)
    if variant is not BandVariant.PLAIN and not dist.lattice:
        raise IncompatibleVariantError(
            f"variant '{variant.value}' applies to lattice families only, not {dist.family}"
        )
    m = dist.moments()
    sd = m.sd
    if not sd > 0:
        raise DomainError(f"{dist}: zero variance, the band is degenerate")
    lo, hi = m.mean - sd, m.mean + sd
    lo_kind, hi_kind = VARIANT_KINDS[variant]
    if lo_kind is LowerKind.FLOORED:
        lo = float(math.floor(lo + endpoint_slack(lo)))
    if hi_kind is UpperKind.CEILED:
        hi = float(math.ceil(hi - endpoint_slack(hi)))
    return Band(lo=lo, hi=hi, lo_kind=lo_kind, hi_kind=hi_kind, mean=m.mean, sd=sd)


def integer_range(b: Band) -> tuple[int, int]:
    """구간에 속하는 첫 정수와 마지막 정수"""
    if b.lo_kind is LowerKind.FLOORED:
        first = int(b.lo)
    elif b.lo_kind is LowerKind.OPEN:
        # k > lo
        first = math.floor(b.lo + endpoint_slack(b.lo)) + 1
    else:
        first = math.ceil(b.lo - endpoint_slack(b.lo))
    if b.hi_kind is UpperKind.CEILED:
        last = int(b.hi)
    else:
        last = math.floor(b.hi + abs(b.hi) * ENDPOINT_RTOL + ENDPOINT_ATOL)
    return first, last
