"""
계열 매개변수 스윕과 단조성 검사
"""
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Callable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..catalog import DistSpec, build_dist, get_family_registry
from ..coverage import CORRECTED_VARIANT, BandVariant, ThresholdKind, coverage, threshold
from ..errors import GridError, SigbandError, SpecParseError
from ..logging import get_logger
from .table import SweepRow, SweepTable

logger = get_logger("sigband.sweep.runner")

# 스윕하지 않는 필수 매개변수의 기본값
SWEEP_DEFAULTS: dict[str, dict[str, Any]] = {
    "gamma": {"alpha": 1.0},
    "uniform": {"a": 0.0, "b": 1.0},
    "beta": {"alpha": 2.0, "beta": 2.0},
    "pareto": {"alpha": 3.0},
    "weibull": {"k": 1.0},
    "lognormal": {"sigma": 1.0},
    "studentt": {"nu": 3.0},
    "invgaussian": {"mu": 1.0, "lambda": 1.0},
    "geometric": {"p": 0.5},
    "negbinomial": {"n": 2, "p": 0.5},
    "poisson": {"lambda": 3.0},
    "perturbedpoisson": {"eps": 0.1},
}

# `<family>_j` 는 그 계열의 보정 변형
CORRECTED_SUFFIX = "_j"

MONOTONE_TOL = 1e-12


class Direction(str, Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class Violation(BaseModel):
    """단조성을 깨는 행 쌍"""
    model_config = ConfigDict(frozen=True)

    index: int
    param_a: float
    param_b: float
    coverage_a: float
    coverage_b: float


def resolve_family(family: str, variant: BandVariant | str | None = None) -> tuple[str, BandVariant]:
    """
    계열 이름과 변형을 정규화합니다. `geometric_J` 같은 이름은 보정 변형을 뜻합니다.

    Raises:
        SpecParseError: 알 수 없는 계열
    """
    name = family.strip().lower()
    corrected = False
    if name.endswith(CORRECTED_SUFFIX) and name[: -len(CORRECTED_SUFFIX)] in CORRECTED_VARIANT:
        name = name[: -len(CORRECTED_SUFFIX)]
        corrected = True
    cls = get_family_registry().get_family(name)
    if cls is None:
        raise SpecParseError(f"unknown family '{family}'")
    name = cls.family
    if variant is not None:
        return name, BandVariant(variant)
    if corrected:
        return name, CORRECTED_VARIANT[name]
    return name, BandVariant.PLAIN


def make_dist_builder(
    family: str,
    param: str,
    fixed: dict[str, Any] | None = None,
) -> Callable[[float], DistSpec]:
    """param 값 하나를 받아 분포를 만드는 함수 (나머지는 fixed, 없으면 스윕 기본값)"""
    cls = get_family_registry().get_family(family)
    field = cls.field_for_key(param)
    if field is None:
        raise SpecParseError(f"{family} has no parameter '{param}'")
    params = {}
    for source in (SWEEP_DEFAULTS.get(family, {}), fixed or {}):
        for key, value in source.items():
            name = cls.field_for_key(key)
            if name is None:
                raise SpecParseError(f"{family} has no parameter '{key}'")
            params[name] = value
    params.pop(field, None)

    def build(value: float) -> DistSpec:
        return build_dist(family, {**params, field: value})

    return build


def make_evaluator(
    family: str,
    param: str,
    fixed: dict[str, Any] | None = None,
    variant: BandVariant | str = BandVariant.PLAIN,
) -> Callable[[float], float]:
    """param 값 하나를 받아 포함 확률을 돌려주는 함수"""
    build = make_dist_builder(family, param, fixed)

    def evaluate(value: float) -> float:
        return coverage(build(value), variant).value

    return evaluate


def sweep_family(
    family: str,
    param: str,
    grid: Sequence[float],
    fixed: dict[str, Any] | None = None,
    variant: BandVariant | str | None = None,
    threshold_kind: ThresholdKind | str = ThresholdKind.EXACT,
    workers: int = 1,
    title: str = "",
) -> SweepTable:
    """
    격자의 각 점에서 J 를 계산합니다. 행은 격자 순서를 따릅니다.

    Raises:
        GridError: 격자가 증가하지 않거나 점이 계열 범위를 벗어난 경우 (인덱스 포함)
    """
    name, variant = resolve_family(family, variant)
    grid = [float(x) for x in grid]
    if not grid:
        raise GridError("empty grid", 0)
    for i in range(1, len(grid)):
        if not grid[i] > grid[i - 1]:
            raise GridError(f"grid must be strictly increasing ({grid[i - 1]!r} -> {grid[i]!r})", i)

    evaluate = make_evaluator(name, param, fixed, variant)

    def point(index: int) -> float:
        try:
            return evaluate(grid[index])
        except SigbandError as e:
            raise GridError(f"{param}={grid[index]!r}: {e}", index) from e

    logger.debug(f"스윕: {name} {param} ({len(grid)} 점, 변형 {variant.value}, 워커 {workers})")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(point, range(len(grid))))
    else:
        values = [point(i) for i in range(len(grid))]

    level = threshold(threshold_kind)
    rows = [SweepRow(param=x, coverage=c, excess=c - level) for x, c in zip(grid, values)]
    return SweepTable(
        family=name,
        param=param,
        variant=variant,
        fixed=dict(fixed or {}),
        threshold_kind=ThresholdKind(threshold_kind),
        title=title,
        rows=rows,
    )


def check_monotone(
    table: SweepTable,
    direction: Direction | str,
    tol: float = MONOTONE_TOL,
    step: int = 1,
) -> list[Violation]:
    """
    coverage 열이 direction 으로 단조인지 검사합니다.

    Args:
        step: 비교할 행 간격 (2 이면 i 와 i+2)

    Returns:
        위반 목록 (비어 있으면 단조)
    """
    if not table.rows:
        raise GridError("empty table", 0)
    if step < 1:
        raise ValueError(f"step must be positive, got {step}")
    direction = Direction(direction)
    violations = []
    rows = table.rows
    for i in range(len(rows) - step):
        a, b = rows[i], rows[i + step]
        if direction is Direction.INCREASING:
            broken = b.coverage < a.coverage - tol
        else:
            broken = b.coverage > a.coverage + tol
        if broken:
            violations.append(Violation(
                index=i, param_a=a.param, param_b=b.param,
                coverage_a=a.coverage, coverage_b=b.coverage,
            ))
    return violations


def linspace(lo: float, hi: float, count: int) -> list[float]:
    """끝점을 포함하는 등간격 격자"""
    return np.linspace(lo, hi, count).tolist()


def geomspace(lo: float, hi: float, count: int) -> list[float]:
    """끝점을 포함하는 로그 등간격 격자"""
    return np.geomspace(lo, hi, count).tolist()
