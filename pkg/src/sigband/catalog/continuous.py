"""
연속 분포 계열
"""
import math
from typing import ClassVar

from pydantic import AliasChoices, Field, model_validator

from ..specfun import (
    EULER_GAMMA,
    PI,
    erfcx,
    gauss_2f1,
    ln_gamma,
    normal_cdf,
    reg_inc_beta,
    reg_inc_gamma_lower,
    student_t_cdf_beta,
)
from ..specfun.constants import LN_SQRT_2PI, SQRTH
from .base import DistSpec, Moments

# Student t: 이 값 이하의 x²/ν 에서 ₂F₁ 경로 (Pfaff 인자 <= 0.95)
T_HYPERGEOMETRIC_LIMIT = 19.0
# exp(-exp(-z)) 가 언더플로하는 하한
MAX_GUMBEL_Z = 700.0


class Gamma(DistSpec):
    """형태 α, 척도 β 의 감마 분포"""
    family: ClassVar[str] = "gamma"
    description: ClassVar[str] = "Gamma(shape alpha, scale beta)"
    keys: ClassVar[dict[str, str]] = {"alpha": "alpha", "beta": "beta"}
    positive: ClassVar[tuple[str, ...]] = ("alpha", "beta")

    alpha: float
    beta: float = 1.0

    def moments(self) -> Moments:
        return Moments(mean=self.alpha * self.beta, variance=self.alpha * self.beta ** 2)

    def support(self):
        return 0.0, math.inf

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return reg_inc_gamma_lower(self.alpha, x / self.beta)

    def pdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        if x == 0:
            if self.alpha < 1:
                return math.inf
            return 1.0 / self.beta if self.alpha == 1 else 0.0
        z = x / self.beta
        return math.exp((self.alpha - 1.0) * math.log(z) - z - ln_gamma(self.alpha)) / self.beta


class Uniform(DistSpec):
    """[a, b] 위의 균등 분포"""
    family: ClassVar[str] = "uniform"
    description: ClassVar[str] = "Uniform(a, b)"
    keys: ClassVar[dict[str, str]] = {"a": "a", "b": "b"}

    a: float
    b: float

    @model_validator(mode="after")
    def _check_order(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or not self.a < self.b:
            raise ValueError("a must be less than b")
        return self

    def moments(self) -> Moments:
        return Moments(mean=0.5 * (self.a + self.b), variance=(self.b - self.a) ** 2 / 12.0)

    def support(self):
        return self.a, self.b

    def cdf(self, x: float) -> float:
        return min(1.0, max(0.0, (x - self.a) / (self.b - self.a)))

    def pdf(self, x: float) -> float:
        return 1.0 / (self.b - self.a) if self.a <= x <= self.b else 0.0


class Beta(DistSpec):
    """[0, 1] 위의 베타 분포"""
    family: ClassVar[str] = "beta"
    description: ClassVar[str] = "Beta(alpha, beta)"
    keys: ClassVar[dict[str, str]] = {"alpha": "alpha", "beta": "beta"}
    positive: ClassVar[tuple[str, ...]] = ("alpha", "beta")

    alpha: float
    beta: float

    def moments(self) -> Moments:
        total = self.alpha + self.beta
        return Moments(
            mean=self.alpha / total,
            variance=self.alpha * self.beta / (total * total * (total + 1.0)),
        )

    def support(self):
        return 0.0, 1.0

    def cdf(self, x: float) -> float:
        return reg_inc_beta(self.alpha, self.beta, min(1.0, max(0.0, x)))

    def pdf(self, x: float) -> float:
        if x < 0 or x > 1:
            return 0.0
        if x == 0 or x == 1:
            exponent = self.alpha if x == 0 else self.beta
            if exponent < 1:
                return math.inf
            if exponent > 1:
                return 0.0
            x = min(max(x, 1e-300), 1.0 - 1e-16)
        log_norm = ln_gamma(self.alpha + self.beta) - ln_gamma(self.alpha) - ln_gamma(self.beta)
        return math.exp(log_norm + (self.alpha - 1.0) * math.log(x) + (self.beta - 1.0) * math.log1p(-x))


class Laplace(DistSpec):
    """위치 μ, 척도 b 의 Laplace 분포"""
    family: ClassVar[str] = "laplace"
    description: ClassVar[str] = "Laplace(location mu, scale b)"
    keys: ClassVar[dict[str, str]] = {"mu": "mu", "b": "b"}
    positive: ClassVar[tuple[str, ...]] = ("b",)

    mu: float = 0.0
    b: float = 1.0

    def moments(self) -> Moments:
        return Moments(mean=self.mu, variance=2.0 * self.b ** 2)

    def cdf(self, x: float) -> float:
        z = (x - self.mu) / self.b
        if z <= 0:
            return 0.5 * math.exp(z)
        return 1.0 - 0.5 * math.exp(-z)

    def pdf(self, x: float) -> float:
        return math.exp(-abs(x - self.mu) / self.b) / (2.0 * self.b)


class Gumbel(DistSpec):
    """위치 μ, 척도 β 의 Gumbel (최댓값) 분포"""
    family: ClassVar[str] = "gumbel"
    description: ClassVar[str] = "Gumbel(location mu, scale beta)"
    keys: ClassVar[dict[str, str]] = {"mu": "mu", "beta": "beta"}
    positive: ClassVar[tuple[str, ...]] = ("beta",)

    mu: float = 0.0
    beta: float = 1.0

    def moments(self) -> Moments:
        return Moments(mean=self.mu + self.beta * EULER_GAMMA, variance=PI ** 2 * self.beta ** 2 / 6.0)

    def cdf(self, x: float) -> float:
        z = (x - self.mu) / self.beta
        if z < -MAX_GUMBEL_Z:
            return 0.0
        return math.exp(-math.exp(-z))

    def pdf(self, x: float) -> float:
        z = (x - self.mu) / self.beta
        if z < -MAX_GUMBEL_Z:
            return 0.0
        return math.exp(-(z + math.exp(-z))) / self.beta




class Logistic(DistSpec):
    """위치 μ, 척도 s 의 로지스틱 분포"""
    family: ClassVar[str] = "logistic"
    description: ClassVar[str] = "Logistic(location mu, scale s)"
    keys: ClassVar[dict[str, str]] = {"mu": "mu", "s": "s"}
    positive: ClassVar[tuple[str, ...]] = ("s",)

    mu: float = 0.0
    s: float = 1.0

    def moments(self) -> Moments:
        return Moments(mean=self.mu, variance=PI ** 2 * self.s ** 2 / 3.0)

    def cdf(self, x: float) -> float:
        z = (x - self.mu) / self.s
        if z >= 0:
            return 1.0 / (1.0 + math.exp(-z))
        e = math.exp(z)
        return e / (1.0 + e)

    def pdf(self, x: float) -> float:
        e = math.exp(-abs(x - self.mu) / self.s)
        return e / (self.s * (1.0 + e) ** 2)


class Pareto(DistSpec):
    """척도 x_m, 형태 α 의 Pareto 분포 (유한 분산을 위해 α > 2)"""
    family: ClassVar[str] = "pareto"
    description: ClassVar[str] = "Pareto(scale xm, shape alpha > 2)"
    keys: ClassVar[dict[str, str]] = {"xm": "xm", "alpha": "alpha"}
    positive: ClassVar[tuple[str, ...]] = ("xm",)

    xm: float = Field(1.0, validation_alias=AliasChoices("xm", "x_m"))
    alpha: float

    @model_validator(mode="after")
    def _check_alpha(self):
        if not math.isfinite(self.alpha) or self.alpha <= 2:
            raise ValueError("alpha must exceed 2")
        return self

    def moments(self) -> Moments:
        a = self.alpha
        return Moments(
            mean=a * self.xm / (a - 1.0),
            variance=a * self.xm ** 2 / ((a - 1.0) ** 2 * (a - 2.0)),
        )

    def support(self):
        return self.xm, math.inf

    def cdf(self, x: float) -> float:
        if x <= self.xm:
            return 0.0
        return -math.expm1(self.alpha * math.log(self.xm / x))

    def pdf(self, x: float) -> float:
        if x < self.xm:
            return 0.0
        return math.exp(math.log(self.alpha) + self.alpha * math.log(self.xm) - (self.alpha + 1.0) * math.log(x))


class Weibull(DistSpec):
    """척도 λ, 형태 k 의 Weibull 분포 (k <= 1 에서 무한 분해 가능)"""
    family: ClassVar[str] = "weibull"
    description: ClassVar[str] = "Weibull(scale lambda, shape k)"
    keys: ClassVar[dict[str, str]] = {"lam": "lambda", "k": "k"}
    positive: ClassVar[tuple[str, ...]] = ("lam", "k")

    lam: float = Field(1.0, validation_alias=AliasChoices("lam", "lambda"))
    k: float

    def moments(self) -> Moments:
        g1 = ln_gamma(1.0 + 1.0 / self.k)
        g2 = ln_gamma(1.0 + 2.0 / self.k)
        mean = self.lam * math.exp(g1)
        ratio = math.expm1(g2 - 2.0 * g1)
        return Moments(mean=mean, variance=mean * mean * ratio)

    def support(self):
        return 0.0, math.inf

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return -math.expm1(-((x / self.lam) ** self.k))

    def pdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        if x == 0:
            if self.k < 1:
                return math.inf
            return 1.0 / self.lam if self.k == 1 else 0.0
        z = x / self.lam
        return self.k / self.lam * math.exp((self.k - 1.0) * math.log(z) - z ** self.k)


class LogNormal(DistSpec):
    """ln X ~ N(μ, σ²) 인 로그정규 분포"""
    family: ClassVar[str] = "lognormal"
    description: ClassVar[str] = "LogNormal(mu, sigma)"
    keys: ClassVar[dict[str, str]] = {"mu": "mu", "sigma": "sigma"}
    positive: ClassVar[tuple[str, ...]] = ("sigma",)

    mu: float = 0.0
    sigma: float

    def moments(self) -> Moments:
        s2 = self.sigma ** 2
        return Moments(
            mean=math.exp(self.mu + 0.5 * s2),
            variance=math.expm1(s2) * math.exp(2.0 * self.mu + s2),
        )

    def support(self):
        return 0.0, math.inf

    def mode(self) -> float:
        return math.exp(self.mu - self.sigma ** 2)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return normal_cdf((math.log(x) - self.mu) / self.sigma)

    def pdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        z = (math.log(x) - self.mu) / self.sigma
        return math.exp(-0.5 * z * z - LN_SQRT_2PI - math.log(self.sigma * x))


class StudentT(DistSpec):
    """자유도 ν > 2 의 Student t 분포 (실수 ν 허용)"""
    family: ClassVar[str] = "studentt"
    description: ClassVar[str] = "Student's t(nu > 2)"
    keys: ClassVar[dict[str, str]] = {"nu": "nu"}

    nu: float = Field(validation_alias=AliasChoices("nu", "df"))

    @model_validator(mode="after")
    def _check_nu(self):
        if not math.isfinite(self.nu) or self.nu <= 2:
            raise ValueError("nu must exceed 2")
        return self

    def moments(self) -> Moments:
        return Moments(mean=0.0, variance=self.nu / (self.nu - 2.0))

    def log_norm(self) -> float:
        """Γ((ν+1)/2) / (√(νπ) Γ(ν/2)) 의 로그"""
        nu = self.nu
        return ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) - 0.5 * math.log(nu * PI)

    def cdf(self, x: float) -> float:
        nu = self.nu
        if x * x / nu > T_HYPERGEOMETRIC_LIMIT:
            return student_t_cdf_beta(nu, x)
        hyp = gauss_2f1(0.5, 0.5 * (nu + 1.0), 1.5, -x * x / nu)
        return 0.5 + x * math.exp(self.log_norm()) * hyp

    def pdf(self, x: float) -> float:
        nu = self.nu
        return math.exp(self.log_norm() - 0.5 * (nu + 1.0) * math.log1p(x * x / nu))


class InvGaussian(DistSpec):
    """평균 μ, 형태 λ 의 역가우스 (Wald) 분포"""
    family: ClassVar[str] = "invgaussian"
    description: ClassVar[str] = "Inverse Gaussian(mean mu, shape lambda)"
    keys: ClassVar[dict[str, str]] = {"mu": "mu", "lam": "lambda"}
    positive: ClassVar[tuple[str, ...]] = ("mu", "lam")

    mu: float
    lam: float = Field(validation_alias=AliasChoices("lam", "lambda"))

    def moments(self) -> Moments:
        return Moments(mean=self.mu, variance=self.mu ** 3 / self.lam)

    def support(self):
        return 0.0, math.inf

    def mode(self) -> float:
        r = 1.5 * self.mu / self.lam
        return self.mu * (math.sqrt(1.0 + r * r) - r)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        mu, lam = self.mu, self.lam
        root = math.sqrt(lam / x)
        first = normal_cdf(root * (x / mu - 1.0))
        # e^{2λ/μ}Φ(-t) = erfcx(t/√2)/2 · e^{-λ(x-μ)²/(2μ²x)}
        t = root * (x / mu + 1.0)
        second = 0.5 * erfcx(t * SQRTH) * math.exp(-lam * (x - mu) ** 2 / (2.0 * mu * mu * x))
        return min(1.0, first + second)

    def pdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        mu, lam = self.mu, self.lam
        return math.exp(
            0.5 * math.log(lam / x ** 3) - LN_SQRT_2PI - lam * (x - mu) ** 2 / (2.0 * mu * mu * x)
        )
