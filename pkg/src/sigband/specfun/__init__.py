"""
특수 함수 패키지 - 닫힌 형태 공식이 필요로 하는 모든 특수 함수
"""

from .constants import EULER_GAMMA, PI
from .gamma import ln_gamma, reg_inc_gamma_lower
from .normal import normal_cdf, normal_pdf, erfcx, phi_tail_bracket
from .beta import reg_inc_beta, student_t_cdf_beta
from .hypergeometric import gauss_2f1, contiguous_relation_residual

__all__ = [
    "EULER_GAMMA",
    "PI",
    "ln_gamma",
    "reg_inc_gamma_lower",
    "normal_cdf",
    "normal_pdf",
    "erfcx",
    "phi_tail_bracket",
    "reg_inc_beta",
    "student_t_cdf_beta",
    "gauss_2f1",
    "contiguous_relation_residual",
]
