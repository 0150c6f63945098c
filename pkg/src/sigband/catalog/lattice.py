"""
격자(정수 지지) 분포 계열: 기하, 음이항, 포아송

질량 함수는 로그 공간에서 numpy 로 벡터화해 계산하고, CDF 는 직접 합산합니다.
"""
import math
from typing import ClassVar

import numpy as np
from pydantic import AliasChoices, Field, model_validator

from ..specfun import ln_gamma
from .base import DistSpec, Moments

TAIL_SDS = 40
TAIL_PAD = 50


class LatticeSpec(DistSpec):
    """정수 0, 1, 2, ... 위의 분포"""
    lattice: ClassVar[bool] = True

    def log_pmf(self, k: np.ndarray) -> np.ndarray:
        """정수 배열 k (>= 0) 에서의 ln P{X = k}"""
        raise NotImplementedError

    def support(self):
        return 0.0, math.inf

    def tail_end(self) -> int:
        """이보다 큰 k 의 질량 합은 배정밀도 반올림 오차보다 작습니다"""
        m = self.moments()
        return int(math.ceil(m.mean + TAIL_SDS * m.sd)) + TAIL_PAD

    def pmf(self, k: int) -> float:
        if k < 0:
            return 0.0
        return float(np.exp(self.log_pmf(np.array([k], dtype=float)))[0])

    def pdf(self, x: float) -> float:
        """round(x) 에서의 질량"""
        return self.pmf(int(round(x)))

    def mass(self, first: int, last: int) -> float:
        """P{first <= X <= last}, last 는 tail_end 에서 자릅니다"""
        first = max(first, 0)
        last = min(last, self.tail_end())
        if last < first:
            return 0.0
        ks = np.arange(first, last + 1, dtype=float)
        return float(np.exp(self.log_pmf(ks)).sum())

    def cdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        if math.isinf(x):
            return 1.0
        return min(1.0, self.mass(0, math.floor(x)))


class Geometric(LatticeSpec):
    """
    P{X = k} = p(1-p)^k, k = 0, 1, 2, ...

    p = 1 은 0 에 몰린 퇴화 분포입니다. 질량과 CDF 는 정의되지만 분산이 0 이라
    σ-구간 (band, coverage) 은 DomainError 를 냅니다.
    """
    family: ClassVar[str] = "geometric"
    description: ClassVar[str] = "Geometric(p), failures before first success"
    keys: ClassVar[dict[str, str]] = {"p": "p"}

    p: float

    @model_validator(mode="after")
    def _check_p(self):
        if not (0 < self.p <= 1):
            raise ValueError("p must lie in (0, 1]")
        return self

    def moments(self) -> Moments:
        q = 1.0 - self.p
        return Moments(mean=q / self.p, variance=q / self.p ** 2)

    def log_pmf(self, k):
        k = np.asarray(k, dtype=float)
        if self.p == 1:
            return np.where(k == 0, 0.0, -np.inf)
        return math.log(self.p) + k * math.log1p(-self.p)


class NegBinomial(LatticeSpec):
    """n 번째 성공 전 실패 횟수: C(k+n-1, k) pⁿ (1-p)^k"""
    family: ClassVar[str] = "negbinomial"
    description: ClassVar[str] = "Negative binomial(n, p), failures before n-th success"
    keys: ClassVar[dict[str, str]] = {"n": "n", "p": "p"}

    n: int
    p: float

    @model_validator(mode="after")
    def _check_params(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if not (0 < self.p < 1):
            raise ValueError("p must lie in (0, 1)")
        return self

    def moments(self) -> Moments:
        q = 1.0 - self.p
        return Moments(mean=self.n * q / self.p, variance=self.n * q / self.p ** 2)

    def log_pmf(self, k):
        k = np.asarray(k, dtype=float)
        n = float(self.n)
        log_binom = ln_gamma(k + n) - ln_gamma(k + 1.0) - ln_gamma(n)
        return log_binom + n * math.log(self.p) + k * math.log1p(-self.p)


class Poisson(LatticeSpec):
    """P{X = k} = e^{-λ} λ^k / k!"""
    family: ClassVar[str] = "poisson"
    description: ClassVar[str] = "Poisson(lambda)"
    keys: ClassVar[dict[str, str]] = {"lam": "lambda"}
    positive: ClassVar[tuple[str, ...]] = ("lam",)

    lam: float = Field(validation_alias=AliasChoices("lam", "lambda"))

    def moments(self) -> Moments:
        return Moments(mean=self.lam, variance=self.lam)

    def log_pmf(self, k):
        k = np.asarray(k, dtype=float)
        return k * math.log(self.lam) - self.lam - ln_gamma(k + 1.0)


def poisson_cutoff(lam: float, floor: float = 1e-16) -> int:
    """k > λ 이면서 포아송 질량이 floor 미만이 되는 첫 k (꼬리 질량 < 1e-14)"""
    k = 0
    log_mass = -lam
    log_lam = math.log(lam)
    while k <= lam or math.exp(log_mass) >= floor:
        k += 1
        log_mass += log_lam - math.log(k)
    return k
