"""
분포 명세 기반 클래스와 적률 타입
"""
import math
from typing import ClassVar

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import UnsupportedOperationError


class Moments(BaseModel):
    """평균과 분산"""
    model_config = ConfigDict(frozen=True)

    mean: float
    variance: float

    @property
    def sd(self) -> float:
        return math.sqrt(self.variance)


class DistSpec(BaseModel):
    """
    매개변수화된 분포 계열의 기반 클래스.

    하위 클래스는 family, keys (필드 -> 문자열 문법의 키) 와
    moments / cdf / pdf 를 정의합니다.
    """
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    family: ClassVar[str] = ""
    description: ClassVar[str] = ""
    lattice: ClassVar[bool] = False
    keys: ClassVar[dict[str, str]] = {}
    # 양수여야 하는 필드
    positive: ClassVar[tuple[str, ...]] = ()

    @model_validator(mode="after")
    def _check_positive(self):
        for name in type(self).model_fields:
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{self.keys.get(name, name)} must be finite")
        for name in self.positive:
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"{self.keys.get(name, name)} must be positive")
        return self

    @classmethod
    def field_for_key(cls, key: str) -> str | None:
        """문자열 문법 키 또는 별칭에 해당하는 필드 이름"""
        key = key.strip().lower()
        for name, info in cls.model_fields.items():
            alias = info.validation_alias
            choices = getattr(alias, "choices", None) or ([alias] if alias else [])
            if key in (name, cls.keys.get(name, name), *choices):
                return name
        return None

    def params(self) -> dict[str, float]:
        """문자열 문법 키 기준의 매개변수 딕셔너리"""
        return {self.keys.get(name, name): getattr(self, name) for name in type(self).model_fields}

    def moments(self) -> Moments:
        raise NotImplementedError

    def cdf(self, x: float) -> float:
        raise UnsupportedOperationError(f"{self.family}: cdf is not available")

    def pdf(self, x: float) -> float:
        raise UnsupportedOperationError(f"{self.family}: pdf is not available")

    def support(self) -> tuple[float, float]:
        """지지 집합의 (하한, 상한)"""
        return -math.inf, math.inf

    def __str__(self) -> str:
        body = ",".join(f"{key}={value:g}" for key, value in self.params().items())
        return f"{self.family}:{body}"
