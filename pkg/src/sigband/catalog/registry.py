"""
계열 레지스트리 - 이름으로 분포 계열을 찾고 목록을 제공하는 모듈
"""

from typing import Any, Dict, List, Optional, Type

from ..logging import get_logger
from .base import DistSpec

logger = get_logger("sigband.catalog.registry")


class FamilyRegistry:
    """분포 계열 레지스트리 클래스"""

    def __init__(self):
        self._families: Dict[str, Type[DistSpec]] = {}
        self._aliases: Dict[str, str] = {}

    def register_family(self, cls: Type[DistSpec], aliases: tuple[str, ...] = ()) -> None:
        """
        계열을 레지스트리에 등록합니다.

        Args:
            cls: DistSpec 하위 클래스
            aliases: 추가로 인식할 이름 (소문자)
        """
        name = cls.family
        self._families[name] = cls
        for alias in aliases:
            self._aliases[alias] = name
        logger.debug(f"계열 등록: {name} (별칭: {', '.join(aliases) or '-'})")

    def get_family(self, name: str) -> Optional[Type[DistSpec]]:
        """
        대소문자 구분 없이 계열 클래스를 조회합니다.

        Returns:
            계열 클래스 또는 None
        """
        key = name.strip().lower()
        key = self._aliases.get(key, key)
        return self._families.get(key)

    def family_names(self) -> List[str]:
        """등록 순서의 계열 이름 목록"""
        return list(self._families)

    def get_family_info(self) -> List[Dict[str, Any]]:
        """
        계열 정보 목록을 반환합니다.

        Returns:
            이름, 설명, 매개변수 키, 격자 여부를 담은 딕셔너리 목록
        """
        info = []
        for name, cls in self._families.items():
            info.append({
                "name": name,
                "description": cls.description,
                "params": [cls.keys.get(field, field) for field in cls.model_fields],
                "lattice": cls.lattice,
            })
        return info

    def get_family_count(self) -> Dict[str, int]:
        lattice = sum(1 for cls in self._families.values() if cls.lattice)
        return {
            "total": len(self._families),
            "lattice": lattice,
            "continuous": len(self._families) - lattice,
        }


# 전역 계열 레지스트리 인스턴스
_family_registry = None


def get_family_registry() -> FamilyRegistry:
    """
    전역 계열 레지스트리 인스턴스를 반환합니다.

    Returns:
        계열 레지스트리 인스턴스
    """
    global _family_registry
    if _family_registry is None:
        _family_registry = FamilyRegistry()
        _initialize_default_families(_family_registry)
    return _family_registry


def _initialize_default_families(registry: FamilyRegistry) -> None:
    """기본 계열들을 레지스트리에 등록합니다."""
    from .continuous import (
        Beta, Gamma, Gumbel, InvGaussian, Laplace, LogNormal, Logistic,
        Pareto, StudentT, Uniform, Weibull,
    )
    from .lattice import Geometric, NegBinomial, Poisson
    from .mixtures import CompoundPoissonUniform, PerturbedPoisson

    registry.register_family(Gamma)
    registry.register_family(Uniform)
    registry.register_family(Beta)
    registry.register_family(Laplace)
    registry.register_family(Gumbel)
    registry.register_family(Logistic)
    registry.register_family(Pareto)
    registry.register_family(Weibull)
    registry.register_family(LogNormal)
    registry.register_family(StudentT, aliases=("t", "student_t"))
    registry.register_family(InvGaussian, aliases=("inverse_gaussian", "wald"))
    registry.register_family(Geometric)
    registry.register_family(NegBinomial, aliases=("negative_binomial", "nb"))
    registry.register_family(Poisson)
    registry.register_family(PerturbedPoisson, aliases=("perturbed_poisson",))
    registry.register_family(
        CompoundPoissonUniform, aliases=("compoundpoissonuniform", "compound_poisson")
    )
    logger.debug("기본 계열들이 레지스트리에 등록되었습니다.")
