"""
무한 분해 가능한 반례 계열: εB + X₃ 와 복합 포아송 Y_n

두 계열 모두 포아송 강도가 3 으로 고정됩니다.
"""
from functools import lru_cache
from typing import ClassVar

from pydantic import AliasChoices, Field, model_validator

from ..specfun import normal_cdf, normal_pdf
from .base import DistSpec, Moments
from .lattice import Poisson, poisson_cutoff

POISSON_RATE = 3.0


@lru_cache(maxsize=8)
def poisson_weights(lam: float) -> tuple[float, ...]:
    """잘린 Poisson(λ) 질량 pois(0), pois(1), ..."""
    base = Poisson(lam=lam)
    return tuple(base.pmf(k) for k in range(poisson_cutoff(lam) + 1))


class PerturbedPoisson(DistSpec):
    """X = εB + X₃, B ~ N(0, 1) 와 X₃ ~ Poisson(3) 은 독립"""
    family: ClassVar[str] = "perturbedpoisson"
    description: ClassVar[str] = "eps*N(0,1) + Poisson(3)"
    keys: ClassVar[dict[str, str]] = {"eps": "eps"}
    positive: ClassVar[tuple[str, ...]] = ("eps",)

    eps: float = Field(validation_alias=AliasChoices("eps", "epsilon"))

    def moments(self) -> Moments:
        return Moments(mean=POISSON_RATE, variance=POISSON_RATE + self.eps ** 2)

    def base_weights(self) -> tuple[float, ...]:
        return poisson_weights(POISSON_RATE)

    def cdf(self, x: float) -> float:
        total = sum(w * normal_cdf((x - k) / self.eps) for k, w in enumerate(self.base_weights()))
        return min(1.0, total)

    def pdf(self, x: float) -> float:
        return sum(w * normal_pdf((x - k) / self.eps) for k, w in enumerate(self.base_weights())) / self.eps


class CompoundPoissonUniform(DistSpec):
    """
    Y_n = U_1 + ... + U_N, N ~ Poisson(3), U_i ~ Uniform[1-1/n, 1+1/n].

    닫힌 형태의 CDF 가 없으므로 cdf / pdf 는 지원하지 않고 몬테카를로 경로만 씁니다.
    """
    family: ClassVar[str] = "compound_poisson_uniform"
    description: ClassVar[str] = "Compound Poisson(3) with Uniform[1-1/n, 1+1/n] jumps"
    keys: ClassVar[dict[str, str]] = {"n": "n"}

    n: int

    @model_validator(mode="after")
    def _check_n(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        return self

    @property
    def jump_bounds(self) -> tuple[float, float]:
        return 1.0 - 1.0 / self.n, 1.0 + 1.0 / self.n

    def moments(self) -> Moments:
        # E[U] = 1, E[U²] = 1 + 1/(3n²)
        second = 1.0 + 1.0 / (3.0 * self.n ** 2)
        return Moments(mean=POISSON_RATE, variance=POISSON_RATE * second)
