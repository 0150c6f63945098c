"""독립 오라클 단위 테스트: 구적법, 전수 합산, 몬테카를로"""

import math

import numpy as np
import pytest
from scipy import stats

from sigband.catalog import (
    Beta,
    CompoundPoissonUniform,
    Gamma,
    Geometric,
    Gumbel,
    InvGaussian,
    Laplace,
    LogNormal,
    Logistic,
    NegBinomial,
    Pareto,
    PerturbedPoisson,
    Poisson,
    StudentT,
    Uniform,
    Weibull,
)
from sigband.coverage import THRESHOLD_PAPER, BandVariant, CoverageMethod, j_closed, j_discrete, j_perturbed_poisson
from sigband.errors import DomainError, UnsupportedOperationError
from sigband.oracle import (
    chunk_rng,
    integrate_density,
    j_enumeration,
    j_mc_compound_poisson,
    j_mc_generic,
    j_quadrature,
)
from sigband.oracle.montecarlo import McEstimate, chunk_sizes, poisson_cdf_table, sample_poisson

I_POISSON_3 = 0.616115


class TestQuadrature:
    """구적법 오라클 테스트"""

    def test_laplace(self):
        result = j_quadrature(Laplace(mu=0.0, b=1.0), 1e-11)
        assert result.value == pytest.approx(-math.expm1(-math.sqrt(2.0)), abs=1e-11)
        assert result.method is CoverageMethod.QUADRATURE

    def test_uniform(self):
        assert j_quadrature(Uniform(a=0.0, b=1.0), 1e-11).value == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-11)

    def test_inverse_gaussian_agrees_with_closed_form(self):
        dist = InvGaussian(mu=4.0, lam=1.0)
        assert j_quadrature(dist, 1e-10).value == pytest.approx(j_closed(dist).value, abs=1e-9)

    @pytest.mark.parametrize("dist", [
        Gamma(alpha=0.5),
        Gamma(alpha=4.0, beta=2.0),
        Beta(alpha=2.0, beta=5.0),
        Gumbel(mu=1.0, beta=2.0),
        Logistic(mu=0.0, s=1.0),
        Pareto(xm=1.0, alpha=3.0),
        Weibull(lam=1.0, k=0.7),
        Weibull(lam=1.0, k=3.0),
        LogNormal(mu=0.0, sigma=0.5),
        StudentT(nu=5.0),
        InvGaussian(mu=1.0, lam=3.0),
        PerturbedPoisson(eps=0.1),
    ])
    def test_agrees_with_closed_form(self, dist):
        assert j_quadrature(dist, 1e-10).value == pytest.approx(j_closed(dist).value, abs=1e-9)

    def test_rejects_tiny_tolerance(self):
        with pytest.raises(DomainError):
            j_quadrature(Laplace(), 1e-15)

    def test_rejects_lattice(self):
        with pytest.raises(UnsupportedOperationError):
            j_quadrature(Poisson(lam=3.0))

    @pytest.mark.parametrize("dist, lo", [
        (Laplace(mu=1.0, b=0.5), -math.inf),
        (StudentT(nu=3.0), -math.inf),
        (Gamma(alpha=2.5), 0.0),
        (LogNormal(mu=0.0, sigma=0.8), 0.0),
        (InvGaussian(mu=2.0, lam=5.0), 0.0),
    ])
    def test_density_normalized(self, dist, lo):
        total, _ = integrate_density(dist, lo, math.inf, tol=1e-11)
        assert total == pytest.approx(1.0, abs=1e-9)


class TestEnumeration:
    """격자 계열 전수 합산 테스트"""

    @pytest.mark.parametrize("dist", [
        Poisson(lam=3.0),
        Poisson(lam=0.3),
        Poisson(lam=57.5),
        Geometric(p=0.75),
        Geometric(p=0.05),
        NegBinomial(n=2, p=0.45),
        NegBinomial(n=10, p=0.3),
    ])
    @pytest.mark.parametrize("variant", list(BandVariant))
    def test_agrees_with_summation(self, dist, variant):
        assert j_enumeration(dist, variant).value == pytest.approx(j_discrete(dist, variant).value, abs=1e-12)

    def test_poisson_value(self):
        assert j_enumeration(Poisson(lam=3.0)).value == pytest.approx(I_POISSON_3, abs=5e-7)


class TestMonteCarlo:
    """몬테카를로 오라클 테스트"""

    def test_chunk_sizes(self):
        assert chunk_sizes(150_000, 65536) == [65536, 65536, 18928]
        assert chunk_sizes(65536, 65536) == [65536]

    def test_chunk_streams_are_keyed(self):
        a = chunk_rng(42, 0).random(4)
        b = chunk_rng(42, 0).random(4)
        c = chunk_rng(42, 1).random(4)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, c)

    def test_poisson_sampler(self):
        table = poisson_cdf_table(3.0)
        draws = sample_poisson(chunk_rng(1, 0), table, 200_000)
        assert draws.min() >= 0
        assert draws.mean() == pytest.approx(3.0, abs=0.02)

    def test_reproducible_across_workers(self):
        one = j_mc_compound_poisson(100, 200_000, 42, workers=1)
        many = j_mc_compound_poisson(100, 200_000, 42, workers=8)
        assert one.hits == many.hits
        assert one.estimate == many.estimate

    def test_small_n_stderr(self):
        est = j_mc_compound_poisson(1, 1_000_000, 7)
        assert 0.0 < est.estimate < 1.0
        assert est.stderr <= 6e-4
        assert est.lower_99 < est.estimate < est.upper_99

    def test_interval_uses_two_sided_quantile(self):
        est = McEstimate(estimate=0.6, stderr=1e-3, n_samples=100_000, seed=1, hits=60_000)
        assert est.upper_99 == 0.6 + 2.5758293035489004 * 1e-3
        assert est.lower_99 == 0.6 - 2.5758293035489004 * 1e-3
        assert stats.norm.cdf(2.5758293035489004) == pytest.approx(0.995, abs=1e-14)

    def test_generic_poisson(self):
        est = j_mc_generic(Poisson(lam=3.0), 1_000_000, 1)
        assert abs(est.estimate - I_POISSON_3) <= 4.0 * est.stderr

    def test_generic_geometric(self):
        est = j_mc_generic(Geometric(p=0.5), 1_000_000, 1)
        assert abs(est.estimate - j_discrete(Geometric(p=0.5)).value) <= 4.0 * est.stderr

    def test_generic_perturbed_poisson(self):
        est = j_mc_generic(PerturbedPoisson(eps=0.01), 1_000_000, 1)
        assert abs(est.estimate - j_perturbed_poisson(0.01).value) <= 4.0 * est.stderr

    def test_generic_compound_poisson_delegates(self):
        generic = j_mc_generic(CompoundPoissonUniform(n=10), 100_000, 3, workers=2)
        direct = j_mc_compound_poisson(10, 100_000, 3, workers=1)
        assert generic.hits == direct.hits

    def test_unsupported_family(self):
        with pytest.raises(UnsupportedOperationError):
            j_mc_generic(Laplace(), 100_000, 1)

    def test_rejects_small_sample(self):
        with pytest.raises(DomainError):
            j_mc_compound_poisson(100, 9_999, 1)

    def test_rejects_negative_seed(self):
        with pytest.raises(DomainError):
            j_mc_compound_poisson(100, 100_000, -1)

    @pytest.mark.slow
    def test_compound_poisson_counterexample(self):
        est = j_mc_compound_poisson(100, 10_000_000, 42)
        assert abs(est.estimate - I_POISSON_3) <= 4.0 * est.stderr + 0.001
        assert est.upper_99 < THRESHOLD_PAPER
