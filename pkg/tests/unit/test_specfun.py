"""특수 함수 단위 테스트 (scipy.special 을 독립 기준으로 사용)"""

import math

import pytest
import numpy as np
from scipy import integrate, special

from sigband.errors import DomainError
from sigband.specfun import (
    contiguous_relation_residual,
    erfcx,
    gauss_2f1,
    ln_gamma,
    normal_cdf,
    phi_tail_bracket,
    reg_inc_beta,
    reg_inc_gamma_lower,
    student_t_cdf_beta,
)


class TestLnGamma:
    """ln Γ 테스트"""

    @pytest.mark.parametrize("x", [1e-3, 0.3, 0.5, 1.0, 1.5, 2.0, 7.25, 50.0, 1e4])
    def test_matches_scipy(self, x):
        assert ln_gamma(x) == pytest.approx(special.gammaln(x), rel=1e-12, abs=1e-13)

    def test_half(self):
        assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)

    def test_array_input(self):
        ks = np.arange(1.0, 30.0)
        values = ln_gamma(ks)
        assert values.shape == ks.shape
        assert values[5] == pytest.approx(math.log(120.0), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, float("nan")])
    def test_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            ln_gamma(x)


class TestIncompleteGamma:
    """정규화된 하측 불완전 감마 테스트"""

    @pytest.mark.parametrize("x", [0.5, 2.0])
    def test_exponential_case(self, x):
        assert reg_inc_gamma_lower(1.0, x) == pytest.approx(-math.expm1(-x), abs=1e-14)

    def test_zero_argument(self):
        assert reg_inc_gamma_lower(3.0, 0.0) == 0.0

    def test_matches_density_integral(self):
        density = lambda t: t ** 1.5 * math.exp(-t) / math.gamma(2.5)
        expected, _ = integrate.quad(density, 0.0, 2.5, epsabs=1e-14, epsrel=0.0)
        assert reg_inc_gamma_lower(2.5, 2.5) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("a, x", [(0.3, 0.1), (2.0, 5.0), (10.0, 7.0), (100.0, 110.0), (100.0, 85.0)])
    def test_matches_scipy(self, a, x):
        assert reg_inc_gamma_lower(a, x) == pytest.approx(special.gammainc(a, x), abs=1e-12)

    def test_rejects_bad_domain(self):
        with pytest.raises(DomainError):
            reg_inc_gamma_lower(0.0, 1.0)
        with pytest.raises(DomainError):
            reg_inc_gamma_lower(1.0, -0.1)


class TestIncompleteBeta:
    """정규화된 불완전 베타 테스트"""

    @pytest.mark.parametrize("x", [0.0, 0.37, 1.0])
    def test_uniform_case(self, x):
        assert reg_inc_beta(1.0, 1.0, x) == pytest.approx(x, abs=1e-15)

    def test_reflection(self):
        total = reg_inc_beta(2.0, 5.0, 0.3) + reg_inc_beta(5.0, 2.0, 0.7)
        assert total == pytest.approx(1.0, abs=1e-14)

    def test_matches_density_integral(self):
        density = lambda t: 12.0 * t * (1.0 - t) ** 2
        expected, _ = integrate.quad(density, 0.0, 0.4, epsabs=1e-14, epsrel=0.0)
        assert reg_inc_beta(2.0, 3.0, 0.4) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("a, b, x", [(0.5, 1.5, 0.25), (0.5, 30.0, 1.0 / 29.0), (40.0, 3.0, 0.9), (2.0, 20.0, 0.02)])
    def test_matches_scipy(self, a, b, x):
        assert reg_inc_beta(a, b, x) == pytest.approx(special.betainc(a, b, x), abs=1e-12)

    def test_rejects_bad_domain(self):
        with pytest.raises(DomainError):
            reg_inc_beta(1.0, 1.0, 1.5)
        with pytest.raises(DomainError):
            reg_inc_beta(-1.0, 1.0, 0.5)

    @pytest.mark.parametrize("nu, x", [(3.0, 1.2), (5.0, -0.7), (30.0, 2.5), (7.0, 0.0)])
    def test_student_t_cdf(self, nu, x):
        assert student_t_cdf_beta(nu, x) == pytest.approx(special.stdtr(nu, x), abs=1e-12)


class TestHypergeometric:
    """Gauss ₂F₁ 테스트"""

    def test_zero_argument(self):
        assert gauss_2f1(0.5, 2.0, 1.5, 0.0) == 1.0

    def test_reduces_to_power(self):
        # F(a, b; a; z) = (1 - z)^{-b}
        assert gauss_2f1(0.5, 2.0, 0.5, -0.25) == pytest.approx(0.64, abs=1e-14)

    @pytest.mark.parametrize("a, b, c, z", [
        (0.5, 3.0, 1.5, -1.0 / 3.0),
        (0.5, 30.5, 1.5, -1.0 / 58.0),
        (1.0, 2.5, 3.0, -0.9),
        (0.5, 1.0, 1.5, -5.0),
    ])
    def test_matches_scipy(self, a, b, c, z):
        assert gauss_2f1(a, b, c, z) == pytest.approx(special.hyp2f1(a, b, c, z), rel=1e-12)

    def test_rejects_positive_argument(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 1.0, 1.5, 0.5)

    def test_rejects_nonpositive_integer_c(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 1.0, -2.0, -0.5)

    @pytest.mark.parametrize("nu", [float(nu) for nu in range(3, 101)])
    def test_contiguous_relation(self, nu):
        assert abs(contiguous_relation_residual(nu)) < 1e-10


class TestNormal:
    """정규 분포 함수와 꼬리 구간 테스트"""

    @pytest.mark.parametrize("x", [-8.0, -1.0, 0.0, 0.5, 3.0])
    def test_cdf_matches_scipy(self, x):
        assert normal_cdf(x) == pytest.approx(special.ndtr(x), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, 1.0, 4.9, 5.1, 30.0, 1e5])
    def test_erfcx_matches_scipy(self, x):
        assert erfcx(x) == pytest.approx(special.erfcx(x), rel=1e-12)

    def test_erfcx_rejects_negative(self):
        with pytest.raises(DomainError):
            erfcx(-1.0)

    def test_tail_bracket_straddles(self):
        lower, upper = phi_tail_bracket(2.0, 1)
        assert lower < normal_cdf(-2.0) < upper

    def test_tail_bracket_tightens(self):
        lower, upper = phi_tail_bracket(5.0, 3)
        assert upper - lower < 1e-8
        assert lower <= normal_cdf(-5.0) <= upper

    def test_tail_bracket_rejects_bad_input(self):
        with pytest.raises(DomainError):
            phi_tail_bracket(0.0, 2)
        with pytest.raises(DomainError):
            phi_tail_bracket(2.0, 0)

    def test_cdf_nondecreasing(self):
        values = [normal_cdf(x) for x in np.linspace(-8.0, 8.0, 10001)]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert values[0] < 1e-14
        assert values[-1] == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("x", np.linspace(0.0, 5.0, 101).tolist())
    def test_erfcx_scaling_identity(self, x):
        assert erfcx(x) * math.exp(-x * x) == pytest.approx(special.erfc(x), rel=1e-12)

    @pytest.mark.parametrize("x", [1.0, 2.0, 3.0, 4.0, 6.0])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_tail_bracket_contains(self, x, n):
        lower, upper = phi_tail_bracket(x, n)
        assert lower <= normal_cdf(-x) <= upper

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_tail_bracket_narrows(self, n):
        lower, upper = phi_tail_bracket(4.0, n)
        next_lower, next_upper = phi_tail_bracket(4.0, n + 1)
        assert next_upper - next_lower < upper - lower
