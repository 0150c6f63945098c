"""
정규화된 불완전 베타 함수와 Student t 분포 함수의 베타 경로
"""
import math

from ..errors import DomainError
from .constants import FPMIN, MACHEP, MAX_ITER
from .gamma import ln_gamma


def _beta_fraction(a: float, b: float, x: float) -> float:
    """불완전 베타 연분수 (수정 Lentz)"""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < FPMIN:
        d = FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, MAX_ITER):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= MACHEP:
            break
    return h


def _front(a: float, b: float, x: float) -> float:
    """x^a (1-x)^b / (a B(a,b))"""
    log_front = (
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    return math.exp(log_front) / a


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """
    정규화된 불완전 베타 함수 I_x(a, b).

    x > (a+1)/(a+b+2) 이면 I_x(a,b) = 1 - I_{1-x}(b,a) 로 뒤집어 연분수를 계산합니다.

    Raises:
        DomainError: a <= 0, b <= 0, x 가 [0, 1] 밖
    """
    if not (a > 0 and b > 0) or math.isinf(a) or math.isinf(b):
        raise DomainError(f"reg_inc_beta requires a, b > 0, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"reg_inc_beta requires 0 <= x <= 1, got x={x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0

    if x < (a + 1.0) / (a + b + 2.0):
        value = _front(a, b, x) * _beta_fraction(a, b, x)
    else:
        value = 1.0 - _front(b, a, 1.0 - x) * _beta_fraction(b, a, 1.0 - x)
    return min(1.0, max(0.0, value))


def student_t_cdf_beta(nu: float, x: float) -> float:
    """
    Student t 분포 함수, 불완전 베타 경로.

    F(x) = 1/2 + sign(x)/2 · I_{x²/(ν+x²)}(1/2, ν/2)
    """
    if not (nu > 0):
        raise DomainError(f"student_t_cdf_beta requires nu > 0, got {nu!r}")
    if math.isnan(x):
        raise DomainError("student_t_cdf_beta: x is NaN")
    if x == 0:
        return 0.5
    if math.isinf(x):
        return 1.0 if x > 0 else 0.0
    x2 = x * x
    half = 0.5 * reg_inc_beta(0.5, 0.5 * nu, x2 / (nu + x2))
    return 0.5 + half if x > 0 else 0.5 - half
