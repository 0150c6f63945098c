"""
분포 카탈로그 - 매개변수 검증, 적률, 밀도/질량, CDF
"""

from .base import DistSpec, Moments
from .continuous import (
    Beta,
    Gamma,
    Gumbel,
    InvGaussian,
    Laplace,
    LogNormal,
    Logistic,
    Pareto,
    StudentT,
    Uniform,
    Weibull,
)
from .lattice import Geometric, LatticeSpec, NegBinomial, Poisson
from .mixtures import CompoundPoissonUniform, PerturbedPoisson
from .distributions import cdf, family_names, is_lattice, moments, pdf_or_pmf
from .parser import build_dist, format_dist, parse_dist
from .registry import FamilyRegistry, get_family_registry

__all__ = [
    "DistSpec",
    "Moments",
    "LatticeSpec",
    "Gamma",
    "Uniform",
    "Beta",
    "Laplace",
    "Gumbel",
    "Logistic",
    "Pareto",
    "Weibull",
    "LogNormal",
    "StudentT",
    "InvGaussian",
    "Geometric",
    "NegBinomial",
    "Poisson",
    "PerturbedPoisson",
    "CompoundPoissonUniform",
    "moments",
    "cdf",
    "pdf_or_pmf",
    "is_lattice",
    "family_names",
    "parse_dist",
    "format_dist",
    "build_dist",
    "FamilyRegistry",
    "get_family_registry",
]
