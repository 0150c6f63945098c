"""
적응 구적법 오라클: 밀도를 [μ-σ, μ+σ] 위에서 적분합니다.

scipy.integrate.quad (QUADPACK 적응 Gauss-Kronrod 21/10 쌍) 를 쓰므로
닫힌 형태 공식과는 독립적인 값입니다.
"""
import math

from scipy import integrate

from ..catalog import (
    Beta,
    DistSpec,
    Gamma,
    Gumbel,
    InvGaussian,
    Laplace,
    LogNormal,
    Logistic,
    PerturbedPoisson,
    StudentT,
    Weibull,
)
from ..coverage import CoverageMethod, CoverageResult, band
from ..coverage.result import clip_probability
from ..errors import DomainError, QuadratureError, UnsupportedOperationError
from ..logging import get_logger

logger = get_logger("sigband.oracle.quadrature")

MIN_TOL = 1e-13
DEFAULT_LIMIT = 200


def break_points(dist: DistSpec) -> list[float]:
    """밀도의 최빈값, 꺾임점 등 구간을 나눌 내부 점"""
    if isinstance(dist, (Laplace, Gumbel, Logistic)):
        return [dist.mu]
    if isinstance(dist, StudentT):
        return [0.0]
    if isinstance(dist, (LogNormal, InvGaussian)):
        return [dist.mode()]
    if isinstance(dist, Gamma) and dist.alpha > 1:
        return [(dist.alpha - 1.0) * dist.beta]
    if isinstance(dist, Weibull) and dist.k > 1:
        return [dist.lam * ((dist.k - 1.0) / dist.k) ** (1.0 / dist.k)]
    if isinstance(dist, Beta) and dist.alpha > 1 and dist.beta > 1:
        return [(dist.alpha - 1.0) / (dist.alpha + dist.beta - 2.0)]
    if isinstance(dist, PerturbedPoisson):
        # 폭 ε 의 봉우리가 정수마다 있습니다
        return [float(k) for k in range(len(dist.base_weights()))]
    return []


def j_quadrature(dist: DistSpec, tol: float = 1e-10, limit: int = DEFAULT_LIMIT) -> CoverageResult:
    """
    구적법으로 계산한 P{|X - μ| <= σ}.

    Args:
        dist: 밀도가 있는 연속 계열
        tol: 절대 오차 목표 (>= 1e-13)
        limit: 부분 구간 분할 한도

    Raises:
        QuadratureError: 분할 한도 안에서 tol 에 도달하지 못한 경우
    """
    if dist.lattice:
        raise UnsupportedOperationError(f"{dist.family} is a lattice family; use j_discrete")
    if not tol >= MIN_TOL:
        raise DomainError(f"quadrature tolerance must be at least {MIN_TOL}, got {tol!r}")

    b = band(dist)
    support_lo, support_hi = dist.support()
    lo = max(b.lo, support_lo)
    hi = min(b.hi, support_hi)
    inner = sorted(p for p in break_points(dist) if lo < p < hi)

    value, abserr, info, *rest = integrate.quad(
        dist.pdf, lo, hi,
        epsabs=tol, epsrel=0.0, limit=limit, points=inner or None, full_output=1,
    )
    logger.debug(
        f"{dist}: [{lo!r}, {hi!r}] points={len(inner)} value={value!r} "
        f"err={abserr:.2e} evals={info.get('neval')}"
    )
    if rest and abserr > tol:
        message = rest[0] if isinstance(rest[0], str) else "quadrature did not converge"
        raise QuadratureError(f"{dist}: {message.strip()}", value=value, err_estimate=abserr)
    if not math.isfinite(value):
        raise QuadratureError(f"{dist}: non-finite integral", value=value, err_estimate=math.inf)
    return CoverageResult(
        value=clip_probability(value),
        method=CoverageMethod.QUADRATURE,
        err_estimate=abserr,
    )


def integrate_density(dist: DistSpec, lo: float, hi: float, tol: float = 1e-12,
                      limit: int = DEFAULT_LIMIT) -> tuple[float, float]:
    """[lo, hi] (무한 끝점 허용) 위의 밀도 적분과 오차 추정"""
    inner = [p for p in break_points(dist) if lo < p < hi]
    if inner and math.isfinite(lo) and math.isfinite(hi):
        value, err = integrate.quad(dist.pdf, lo, hi, epsabs=tol, epsrel=0.0, limit=limit,
                                    points=inner)
        return value, err
    if inner:
        # 무한 구간에는 points 를 줄 수 없으므로 최빈값에서 나눕니다
        mid = inner[0]
        left = integrate.quad(dist.pdf, lo, mid, epsabs=tol, epsrel=0.0, limit=limit)
        right = integrate.quad(dist.pdf, mid, hi, epsabs=tol, epsrel=0.0, limit=limit)
        return left[0] + right[0], left[1] + right[1]
    return integrate.quad(dist.pdf, lo, hi, epsabs=tol, epsrel=0.0, limit=limit)
