"""
Gauss 초기하 함수 ₂F₁ (z <= 0) 과 인접 함수 관계 자가 점검
"""
import math

from ..errors import DomainError
from ..logging import get_logger
from .constants import MACHEP

logger = get_logger("sigband.specfun.hypergeometric")

MAX_TERMS = 10_000


def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0 and value == math.floor(value)


def _series(a: float, b: float, c: float, w: float) -> float:
    """0 <= w < 1 에서 ₂F₁ 멱급수를 기계 엡실론 정체까지 합산"""
    term = 1.0
    total = 1.0
    for n in range(MAX_TERMS):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * w
        term *= ratio
        total += term
        if term == 0.0:
            break
        if abs(term) <= MACHEP * abs(total) and abs(ratio) < 1.0:
            break
    else:
        logger.debug(f"₂F₁ 급수가 {MAX_TERMS}항 상한에 도달: a={a}, b={b}, c={c}, w={w}")
    return total


def gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """
    Gauss 초기하 함수 F(a, b; c; z), z <= 0.

    z < 0 이면 Pfaff 변환 F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)) 으로
    인자를 [0, 1) 로 옮긴 뒤 급수를 합산합니다. z = -1 에서 원래 급수는 발산합니다.

    Raises:
        DomainError: c 가 0 이하 정수이거나 z > 0
    """
    for name, value in (("a", a), ("b", b), ("c", c), ("z", z)):
        if not math.isfinite(value):
            raise DomainError(f"gauss_2f1: {name} must be finite, got {value!r}")
    if _is_nonpositive_integer(c):
        raise DomainError(f"gauss_2f1: c must not be a nonpositive integer, got {c!r}")
    if z > 0:
        raise DomainError(f"gauss_2f1 supports z <= 0 only, got z={z!r}")
    if z == 0:
        return 1.0

    w = z / (z - 1.0)
    return (1.0 - z) ** (-a) * _series(a, c - b, c, w)


def contiguous_relation_residual(nu: float) -> float:
    """
    Gauss 인접 함수 관계의 잔차.

    (ν+1)/2·F(1/2,(ν+3)/2;3/2;-1/ν) - ν/2·F(1/2,(ν+1)/2;3/2;-1/ν) - (1/2)(ν/(ν+1))^{(ν+1)/2}

    ₂F₁ 이 정확하면 0 입니다.
    """
    if not (nu > 2) or math.isinf(nu):
        raise DomainError(f"contiguous_relation_residual requires nu > 2, got {nu!r}")
    z = -1.0 / nu
    upper = gauss_2f1(0.5, 0.5 * (nu + 3.0), 1.5, z)
    lower = gauss_2f1(0.5, 0.5 * (nu + 1.0), 1.5, z)
    closed = 0.5 * (nu / (nu + 1.0)) ** (0.5 * (nu + 1.0))
    return 0.5 * (nu + 1.0) * upper - 0.5 * nu * lower - closed
