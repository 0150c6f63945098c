"""
정규 분포 관련 함수: Φ, 스케일된 erfc, Φ 꼬리의 점근 전개 구간
"""
import math

from ..errors import DomainError
from .constants import SQRT_2PI, SQRT_PI, SQRTH

# erfcx: 이 값 이상에서는 연분수를 씁니다
ERFCX_SWITCH = 5.0
ERFCX_MAX_TERMS = 1000
ERFCX_EPS = 1e-16


def normal_cdf(x: float) -> float:
    """표준 정규 분포 함수 Φ(x) = erfc(-x/√2)/2"""
    if math.isnan(x):
        raise DomainError("normal_cdf: x is NaN")
    return 0.5 * math.erfc(-x * SQRTH)


def normal_pdf(x: float) -> float:
    """표준 정규 밀도 φ(x)"""
    return math.exp(-0.5 * x * x) / SQRT_2PI


def erfcx(x: float) -> float:
    """
    스케일된 여오차 함수 e^{x²}·erfc(x), x >= 0.

    작은 x 는 직접 곱, 큰 x 는 Laplace 연분수 (수정 Lentz) 로 계산하므로
    어떤 x >= 0 에서도 넘침이 없습니다.
    """
    if not (x >= 0):
        raise DomainError(f"erfcx requires x >= 0, got {x!r}")
    if math.isinf(x):
        return 0.0
    if x < ERFCX_SWITCH:
        return math.exp(x * x) * math.erfc(x)

    # erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    f = x
    c = x
    d = 0.0
    for j in range(1, ERFCX_MAX_TERMS):
        a = 0.5 * j
        d = x + a * d
        d = 1.0 / d
        c = x + a / c
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < ERFCX_EPS:
            break
    return 1.0 / (SQRT_PI * f)


def phi_tail_bracket(x: float, n: int) -> tuple[float, float]:
    """
    Φ(-x) 의 점근 전개 φ(x)(1/x - 1/x³ + 3/x⁵ - ...) 의 n 항, n+1 항 부분합.

    교대 급수의 나머지는 첫 생략 항의 부호를 따르므로 두 부분합이 Φ(-x) 를 감쌉니다.

    Returns:
        (lower, upper)
    """
    if not (x > 0) or math.isinf(x):
        raise DomainError(f"phi_tail_bracket requires finite x > 0, got {x!r}")
    if n < 1:
        raise DomainError(f"phi_tail_bracket requires n >= 1, got {n!r}")

    inv_x2 = 1.0 / (x * x)
    term = 1.0
    partial = 0.0
    sums = []
    for j in range(n + 1):
        if j > 0:
            term *= -(2 * j - 1) * inv_x2
        partial += term
        sums.append(partial)
    scale = normal_pdf(x) / x
    s_n = scale * sums[n - 1]
    s_next = scale * sums[n]
    return min(s_n, s_next), max(s_n, s_next)
