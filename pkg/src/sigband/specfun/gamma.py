"""
감마 함수 계열: ln Γ 와 정규화된 하측 불완전 감마 함수
"""
import math

import numpy as np

from ..errors import DomainError
from .constants import LN_SQRT_2PI, MACHEP, MAXLOG, MAX_ITER

# Lanczos 근사 계수 (g = 7, n = 9)
LANCZOS_G = 7.0
LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

big = 4.503599627370496e15
biginv = 2.22044604925031308085e-16


def _lanczos_ln(x):
    """x >= 0.5 에서 ln Γ(x)"""
    z = x - 1.0
    series = LANCZOS_COEF[0]
    for i, coef in enumerate(LANCZOS_COEF[1:], start=1):
        series = series + coef / (z + i)
    t = z + LANCZOS_G + 0.5
    return LN_SQRT_2PI + (z + 0.5) * np.log(t) - t + np.log(series)


def ln_gamma(x):
    """
    ln Γ(x), x > 0.

    스칼라와 numpy 배열을 모두 받습니다. 배열 입력은 격자 위 질량 합산에 씁니다.

    Raises:
        DomainError: x <= 0 또는 NaN
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"ln_gamma requires finite x > 0, got {x!r}")

    small = arr < 0.5
    # Γ(x) = Γ(x+1)/x
    shifted = np.where(small, arr + 1.0, arr)
    result = _lanczos_ln(shifted) - np.where(small, np.log(arr), 0.0)
    if result.ndim == 0:
        return float(result)
    return result


def _log_prefactor(a: float, x: float) -> float:
    """log(x^a e^-x / Γ(a))"""
    return a * math.log(x) - x - ln_gamma(a)


def _igam_series(a: float, x: float) -> float:
    """하측 불완전 감마의 멱급수 (x < a+1)"""
    ax = _log_prefactor(a, x)
    if ax < -MAXLOG:  # underflow
        return 0.0
    r = a
    c = 1.0
    ans = 1.0
    for _ in range(MAX_ITER):
        r += 1.0
        c *= x / r
        ans += c
        if c / ans <= MACHEP:
            break
    return ans * math.exp(ax) / a


def _igamc_fraction(a: float, x: float) -> float:
    """상측 불완전 감마의 연분수 (x >= a+1)"""
    ax = _log_prefactor(a, x)
    if ax < -MAXLOG:  # underflow
        return 0.0

    y = 1.0 - a
    z = x + y + 1.0
    c = 0.0
    pkm2 = 1.0
    qkm2 = x
    pkm1 = x + 1.0
    qkm1 = z * x
    ans = pkm1 / qkm1

    for _ in range(MAX_ITER):
        c += 1.0
        y += 1.0
        z += 2.0
        yc = y * c
        pk = pkm1 * z - pkm2 * yc
        qk = qkm1 * z - qkm2 * yc
        if qk != 0:
            r = pk / qk
            t = abs((ans - r) / r)
            ans = r
        else:
            t = 1.0
        pkm2, pkm1 = pkm1, pk
        qkm2, qkm1 = qkm1, qk
        if abs(pk) > big:
            pkm2 *= biginv
            pkm1 *= biginv
            qkm2 *= biginv
            qkm1 *= biginv
        if t <= MACHEP:
            break
    return ans * math.exp(ax)


def reg_inc_gamma_lower(a: float, x: float) -> float:
    """
    정규화된 하측 불완전 감마 함수 P(a, x) = γ(a, x)/Γ(a).

    x < a+1 이면 급수, 아니면 연분수의 여값을 씁니다.

    Raises:
        DomainError: a <= 0 또는 x < 0
    """
    if not (a > 0 and math.isfinite(a)):
        raise DomainError(f"reg_inc_gamma_lower requires a > 0, got a={a!r}")
    if not (x >= 0):
        raise DomainError(f"reg_inc_gamma_lower requires x >= 0, got x={x!r}")
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        value = _igam_series(a, x)
    else:
        value = 1.0 - _igamc_fraction(a, x)
    return min(1.0, max(0.0, value))
