"""
계열 공통 연산: 적률, CDF, 밀도/질량
"""
from .base import DistSpec, Moments
from .registry import get_family_registry


def moments(dist: DistSpec) -> Moments:
    """닫힌 형태의 평균과 분산"""
    return dist.moments()


def cdf(dist: DistSpec, x: float) -> float:
    """P{X <= x}. 격자 계열은 P{X <= floor(x)}"""
    return dist.cdf(x)


def pdf_or_pmf(dist: DistSpec, x: float) -> float:
    """연속 계열은 x 에서의 밀도, 격자 계열은 round(x) 에서의 질량"""
    return dist.pdf(x)


def is_lattice(dist: DistSpec) -> bool:
    return dist.lattice


def family_names() -> list[str]:
    return get_family_registry().family_names()
