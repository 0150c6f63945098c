"""
σ-구간 포함 확률 J: 구간 변형, 연속 계열의 닫힌 형태, 격자 계열의 합산
"""

from ..catalog import DistSpec
from .band import Band, BandVariant, CORRECTED_VARIANT, LowerKind, UpperKind, band, integer_range
from .closed import (
    check_student_t_routes,
    closed_form_families,
    inverse_gaussian_branches,
    j_closed,
    j_student_t,
    j_student_t_beta,
    student_t_ratio_integral,
    weibull_clamp_binds,
)
from .discrete import j_discrete, j_perturbed_poisson
from .result import (
    THRESHOLD_EXACT,
    THRESHOLD_PAPER,
    CoverageMethod,
    CoverageResult,
    ThresholdKind,
    threshold,
)


def coverage(dist: DistSpec, variant: BandVariant | str = BandVariant.PLAIN) -> CoverageResult:
    """격자 계열은 j_discrete, 그 외는 j_closed 로 보냅니다."""
    if dist.lattice:
        return j_discrete(dist, variant)
    if BandVariant(variant) is not BandVariant.PLAIN:
        # 연속 계열의 보정 변형은 band() 가 거부합니다
        band(dist, variant)
    return j_closed(dist)


__all__ = [
    "Band",
    "BandVariant",
    "CORRECTED_VARIANT",
    "LowerKind",
    "UpperKind",
    "band",
    "integer_range",
    "j_closed",
    "j_discrete",
    "j_perturbed_poisson",
    "j_student_t",
    "j_student_t_beta",
    "check_student_t_routes",
    "closed_form_families",
    "inverse_gaussian_branches",
    "weibull_clamp_binds",
    "student_t_ratio_integral",
    "coverage",
    "CoverageMethod",
    "CoverageResult",
    "ThresholdKind",
    "threshold",
    "THRESHOLD_EXACT",
    "THRESHOLD_PAPER",
]
