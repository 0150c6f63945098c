"""
격자 계열의 전수 합산 오라클

0 부터 평균 + 40σ 까지 모든 정수를 훑으며 구간 부등식을 그대로 판정하고
스칼라 질량을 더합니다. j_discrete 의 정수 범위 계산과는 따로 구현되어 있습니다.
"""
import math

from ..catalog import LatticeSpec
from ..coverage import BandVariant, CoverageMethod, CoverageResult
from ..coverage.result import clip_probability
from ..errors import IncompatibleVariantError
from ..specfun.constants import MACHEP

SPAN_SDS = 40
REL = 1e-12
ABS = 1e-12


def _inside(k: int, mean: float, sd: float, variant: BandVariant) -> bool:
    lo, hi = mean - sd, mean + sd
    below_hi = k <= hi * (1 + REL) + ABS if hi >= 0 else k <= hi + ABS
    if variant is BandVariant.PLAIN:
        return k >= lo - max(ABS, abs(lo) * REL) and below_hi
    if variant is BandVariant.GEOMETRIC_CORRECTED:
        return k > lo + max(ABS, abs(lo) * REL) and below_hi
    floor_lo = math.floor(lo + max(ABS, abs(lo) * REL))
    if variant is BandVariant.NB_CORRECTED:
        return floor_lo <= k and below_hi
    ceil_hi = math.ceil(hi - max(ABS, abs(hi) * REL))
    return floor_lo <= k <= ceil_hi


def j_enumeration(dist: LatticeSpec, variant: BandVariant | str = BandVariant.PLAIN) -> CoverageResult:
    """전수 합산으로 계산한 격자 계열의 J"""
    if not dist.lattice:
        raise IncompatibleVariantError(f"{dist.family} is not a lattice family")
    variant = BandVariant(variant)
    m = dist.moments()
    last = int(math.ceil(m.mean + SPAN_SDS * m.sd)) + SPAN_SDS
    total = 0.0
    count = 0
    for k in range(last + 1):
        if _inside(k, m.mean, m.sd, variant):
            total += dist.pmf(k)
            count += 1
    return CoverageResult(
        value=clip_probability(total),
        method=CoverageMethod.SUMMATION,
        err_estimate=MACHEP * (count + 1) * 8.0,
    )
