"""
연속 계열의 닫힌 형태 σ-구간 포함 확률 J

각 계열의 값은 위치/척도에 무관한 형태로 계산합니다.
"""
import math
from typing import Callable

from scipy import integrate

from ..catalog import (
    Beta,
    CompoundPoissonUniform,
    DistSpec,
    Gamma,
    Gumbel,
    InvGaussian,
    Laplace,
    LogNormal,
    Logistic,
    Pareto,
    PerturbedPoisson,
    StudentT,
    Uniform,
    Weibull,
)
from ..errors import DomainError, SelfCheckError, UnsupportedOperationError
from ..logging import get_logger
from ..specfun import (
    EULER_GAMMA,
    PI,
    erfcx,
    gauss_2f1,
    ln_gamma,
    normal_cdf,
    reg_inc_beta,
    reg_inc_gamma_lower,
)
from ..specfun.constants import SQRTH
from .discrete import j_perturbed_poisson
from .result import CoverageMethod, CoverageResult, clip_probability

logger = get_logger("sigband.coverage.closed")

CLOSED_FORM_ERR = 1e-12
# Student t 두 경로의 허용 차이
DUAL_ROUTE_TOL = 1e-10


def j_gamma(alpha: float) -> float:
    root = math.sqrt(alpha)
    lower = alpha - root
    upper_mass = reg_inc_gamma_lower(alpha, alpha + root)
    if lower <= 0:
        return upper_mass
    return upper_mass - reg_inc_gamma_lower(alpha, lower)


def j_beta(alpha: float, beta: float) -> float:
    m = Beta(alpha=alpha, beta=beta).moments()
    lo = max(0.0, m.mean - m.sd)
    hi = min(1.0, m.mean + m.sd)
    return reg_inc_beta(alpha, beta, hi) - reg_inc_beta(alpha, beta, lo)


def j_laplace() -> float:
    return -math.expm1(-math.sqrt(2.0))


def j_gumbel() -> float:
    shift = PI / math.sqrt(6.0)
    return math.exp(-math.exp(-(EULER_GAMMA + shift))) - math.exp(-math.exp(-(EULER_GAMMA - shift)))


def j_logistic() -> float:
    # 1/(1+e^{-s}) - 1/(1+e^{s}) = tanh(s/2), s = π/√3
    return math.tanh(PI / (2.0 * math.sqrt(3.0)))


def j_uniform() -> float:
    return 2.0 / math.sqrt(12.0)


def j_pareto(alpha: float) -> float:
    """
    1 - (1 + δ)^{-α}, δ = (1 + s)/((α - 1)s), s = √(1 - 2/α).

    하측 끝점은 항상 x_m 아래에 있어 상측 끝점의 CDF 만 남습니다.
    """
    s = math.sqrt(1.0 - 2.0 / alpha)
    delta = (1.0 + s) / ((alpha - 1.0) * s)
    return -math.expm1(-alpha * math.log1p(delta))


def _weibull_spread(k: float) -> tuple[float, float]:
    """ln Γ(1+1/k) 와 변동계수 r = σ/μ"""
    log_g1 = ln_gamma(1.0 + 1.0 / k)
    log_g2 = ln_gamma(1.0 + 2.0 / k)
    r = math.sqrt(math.expm1(log_g2 - 2.0 * log_g1))
    return log_g1, r


def weibull_clamp_binds(k: float) -> bool:
    """하측 끝점 Γ(1+1/k)(1 - r) 이 0 이하로 잘리는지"""
    if not k > 0:
        raise DomainError(f"weibull shape must be positive, got {k!r}")
    _, r = _weibull_spread(k)
    return r >= 1.0


def j_weibull(k: float) -> float:
    """
    W_k = e^{-lo^k} - e^{-hi^k}, 표준화된 끝점 lo = max(0, g(1-r)), hi = g(1+r)
    """
    log_g1, r = _weibull_spread(k)
    hi_pow = math.exp(k * (log_g1 + math.log1p(r)))
    lo_pow = 0.0 if r >= 1.0 else math.exp(k * (log_g1 + math.log1p(-r)))
    return math.exp(-lo_pow) - math.exp(-hi_pow)


def j_lognormal(sigma: float) -> float:
    """
    Φ((σ²/2 + ln(1+y))/σ) - Φ((σ²/2 + ln(1-y))/σ), y = √(e^{σ²} - 1).

    σ >= √(ln 2) 이면 y >= 1 이고 하측 끝점이 0 이하이므로 둘째 항이 없습니다.
    """
    s2 = sigma * sigma
    y = math.sqrt(math.expm1(s2))
    upper = normal_cdf((0.5 * s2 + math.log1p(y)) / sigma)
    if y >= 1.0:
        return upper
    return upper - normal_cdf((0.5 * s2 + math.log1p(-y)) / sigma)


def j_student_t(nu: float) -> float:
    """
    J_ν = 2√(ν/(ν-2)) · Γ((ν+1)/2)/(√(νπ)Γ(ν/2)) · F(1/2, (ν+1)/2; 3/2; -1/(ν-2))
    """
    log_norm = ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) - 0.5 * math.log(nu * PI)
    hyp = gauss_2f1(0.5, 0.5 * (nu + 1.0), 1.5, -1.0 / (nu - 2.0))
    return 2.0 * math.sqrt(nu / (nu - 2.0)) * math.exp(log_norm) * hyp


def j_student_t_beta(nu: float) -> float:
    """불완전 베타 경로: J_ν = I_{1/(ν-1)}(1/2, ν/2)"""
    if not nu > 2:
        raise DomainError(f"nu must exceed 2, got {nu!r}")
    return reg_inc_beta(0.5, 0.5 * nu, 1.0 / (nu - 1.0))


def student_t_ratio_integral(nu: float) -> float:
    """
    ν ∫_1^{√(ν/(ν-2))} ((ν+1)/(ν+x²))^{(ν+1)/2} dx.

    이 값이 1 보다 크면 J_{ν+2} < J_ν 입니다.
    """
    if not nu > 2:
        raise DomainError(f"nu must exceed 2, got {nu!r}")
    power = 0.5 * (nu + 1.0)
    upper = math.sqrt(nu / (nu - 2.0))

    def integrand(x: float) -> float:
        return math.exp(power * (math.log(nu + 1.0) - math.log(nu + x * x)))

    value, _ = integrate.quad(integrand, 1.0, upper, epsabs=1e-13, epsrel=1e-12)
    return nu * value


def inverse_gaussian_branches(y: float) -> tuple[float, float]:
    """
    y = √(μ/λ) 일 때 (J₁(y), J₂(y)), J = J₁ - J₂.

    J₁ 은 상측 끝점 μ(1+y) 의 CDF, J₂ 는 y < 1 일 때 하측 끝점 μ(1-y) 의 CDF 이고
    e^{2/y²}Φ(-t) 꼴의 곱은 erfcx 로 넘침 없이 계산합니다.
    """
    if not (y > 0 and math.isfinite(y)):
        raise DomainError(f"inverse gaussian ratio must be finite and positive, got {y!r}")
    up = 1.0 + y
    a1 = (1.0 + 2.0 / y) / math.sqrt(up)
    j1 = normal_cdf(1.0 / math.sqrt(up)) + 0.5 * erfcx(a1 * SQRTH) * math.exp(-0.5 / up)
    if y >= 1.0:
        return j1, 0.0
    down = 1.0 - y
    a2 = (2.0 / y - 1.0) / math.sqrt(down)
    j2 = normal_cdf(-1.0 / math.sqrt(down)) + 0.5 * erfcx(a2 * SQRTH) * math.exp(-0.5 / down)
    return j1, j2


def j_inverse_gaussian(mu: float, lam: float) -> float:
    j1, j2 = inverse_gaussian_branches(math.sqrt(mu / lam))
    return j1 - j2


_CLOSED_FORMS: dict[type, Callable[[DistSpec], float]] = {
    Gamma: lambda d: j_gamma(d.alpha),
    Uniform: lambda d: j_uniform(),
    Beta: lambda d: j_beta(d.alpha, d.beta),
    Laplace: lambda d: j_laplace(),
    Gumbel: lambda d: j_gumbel(),
    Logistic: lambda d: j_logistic(),
    Pareto: lambda d: j_pareto(d.alpha),
    Weibull: lambda d: j_weibull(d.k),
    LogNormal: lambda d: j_lognormal(d.sigma),
    StudentT: lambda d: j_student_t(d.nu),
    InvGaussian: lambda d: j_inverse_gaussian(d.mu, d.lam),
}


def closed_form_families() -> list[str]:
    return [cls.family for cls in _CLOSED_FORMS]


def check_student_t_routes(nu: float, tol: float = DUAL_ROUTE_TOL) -> float:
    """
    ₂F₁ 경로와 불완전 베타 경로의 차이를 반환합니다.

    Raises:
        SelfCheckError: 차이가 tol 을 넘는 경우
    """
    primary = j_student_t(nu)
    secondary = j_student_t_beta(nu)
    diff = abs(primary - secondary)
    logger.debug(f"Student t 두 경로: nu={nu}, 2F1={primary!r}, beta={secondary!r}, diff={diff:.2e}")
    if diff > tol:
        raise SelfCheckError(
            f"student t routes disagree at nu={nu}: 2F1={primary!r}, beta={secondary!r}"
        )
    return diff


def j_closed(dist: DistSpec, self_check: bool = False) -> CoverageResult:
    """
    연속 계열의 닫힌 형태 J = P{|X - μ| <= σ}.

    Args:
        dist: 연속 계열 분포
        self_check: Student t 에서 불완전 베타 경로로 교차 확인

    Raises:
        UnsupportedOperationError: 닫힌 형태가 없는 계열
    """
    if isinstance(dist, PerturbedPoisson):
        return j_perturbed_poisson(dist.eps)
    if isinstance(dist, CompoundPoissonUniform):
        raise UnsupportedOperationError(
            f"{dist.family} has no closed form; use the Monte-Carlo oracle"
        )
    formula = _CLOSED_FORMS.get(type(dist))
    if formula is None:
        raise UnsupportedOperationError(
            f"{dist.family} is a lattice family; use j_discrete"
        )
    if self_check and isinstance(dist, StudentT):
        check_student_t_routes(dist.nu)
    value = formula(dist)
    return CoverageResult(
        value=clip_probability(value),
        method=CoverageMethod.CLOSED_FORM,
        err_estimate=CLOSED_FORM_ERR,
    )
