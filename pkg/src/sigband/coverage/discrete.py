"""
격자 계열의 질량 합산 J 와 섭동 포아송 εB + X₃ 의 준해석적 J
"""
import math

from ..catalog import DistSpec, LatticeSpec, PerturbedPoisson
from ..catalog.mixtures import poisson_weights, POISSON_RATE
from ..errors import DomainError, IncompatibleVariantError
from ..logging import get_logger
from ..specfun import ln_gamma, normal_cdf
from ..specfun.constants import MACHEP
from .band import BandVariant, band, integer_range
from .result import CoverageMethod, CoverageResult, clip_probability

logger = get_logger("sigband.coverage.discrete")


def summation_error(value: float, terms: int, last: int) -> float:
    """log 공간 질량의 반올림 오차 한계: 항 수와 ln Γ(k+1) 의 크기에 비례"""
    log_scale = ln_gamma(max(last, 0) + 2.0)
    return MACHEP * max(value, MACHEP) * (terms + 8.0 * log_scale)


def j_discrete(dist: DistSpec, variant: BandVariant | str = BandVariant.PLAIN) -> CoverageResult:
    """
    구간 안 정수들의 질량 합.

    Raises:
        IncompatibleVariantError: 격자 계열이 아닌 경우
    """
    if not isinstance(dist, LatticeSpec):
        raise IncompatibleVariantError(f"{dist.family} is not a lattice family")
    b = band(dist, variant)
    first, last = integer_range(b)
    value = dist.mass(first, last)
    terms = max(0, last - max(first, 0) + 1)
    logger.debug(f"{dist} {BandVariant(variant).value}: k in [{first}, {last}], J={value!r}")
    return CoverageResult(
        value=clip_probability(value),
        method=CoverageMethod.SUMMATION,
        err_estimate=summation_error(value, terms, last),
    )


def j_perturbed_poisson(eps: float) -> CoverageResult:
    """
    P{|X - 3| <= √(3 + ε²)}, X = εB + X₃.

    Σ_k pois(k; 3)[Φ((u - k)/ε) - Φ((l - k)/ε)], l, u = 3 ∓ √(3 + ε²)
    """
    if not (eps > 0 and math.isfinite(eps)):
        raise DomainError(f"eps must be positive, got {eps!r}")
    sd = PerturbedPoisson(eps=eps).moments().sd
    lo, hi = POISSON_RATE - sd, POISSON_RATE + sd
    weights = poisson_weights(POISSON_RATE)
    total = 0.0
    for k, w in enumerate(weights):
        # Φ(a) - Φ(b) 대신 꼬리끼리 빼서 상쇄를 줄입니다
        upper = (hi - k) / eps
        lower = (lo - k) / eps
        if lower > 0:
            inside = normal_cdf(-lower) - normal_cdf(-upper)
        else:
            inside = normal_cdf(upper) - normal_cdf(lower)
        total += w * inside
    tail = 1.0 - math.fsum(weights)
    return CoverageResult(
        value=clip_probability(total),
        method=CoverageMethod.SUMMATION,
        err_estimate=max(tail, 0.0) + len(weights) * 4.0 * MACHEP,
    )
