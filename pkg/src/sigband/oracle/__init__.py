"""
독립 검증 오라클: 적응 구적법, 전수 합산, 몬테카를로
"""

from .quadrature import break_points, integrate_density, j_quadrature
from .enumeration import j_enumeration
from .montecarlo import (
    Z_99,
    McEstimate,
    chunk_rng,
    j_mc_compound_poisson,
    j_mc_generic,
)

__all__ = [
    "j_quadrature",
    "integrate_density",
    "break_points",
    "j_enumeration",
    "McEstimate",
    "Z_99",
    "chunk_rng",
    "j_mc_compound_poisson",
    "j_mc_generic",
]
