"""
격자 세분 탐색으로 포함 확률의 하한을 찾습니다.

매끄러운 계열은 성긴 격자 뒤 최소점 주변 구간에서 황금분할 탐색,
계단 모양인 격자 계열의 J 는 조밀한 격자 탐색만 씁니다.
"""
import math
from typing import Any, Callable

from pydantic import BaseModel, ConfigDict

from ..catalog import get_family_registry
from ..coverage import BandVariant
from ..errors import DomainError
from ..logging import get_logger
from .runner import geomspace, linspace, make_evaluator, resolve_family

logger = get_logger("sigband.sweep.infimum")

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

COARSE_POINTS = 200
DENSE_STEP = 1e-4
# 이웃 격자점과 이만큼 차이나면 최소점이 불연속점 바로 옆 (한쪽 극한) 입니다
JUMP_TOL = 1e-3


class InfimumReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    param: str
    param_at_inf: float
    inf_value: float
    attained: bool
    evaluations: int


class _Recorder:
    """평가한 모든 점과 최솟값을 기록"""

    def __init__(self, evaluate: Callable[[float], float]):
        self._evaluate = evaluate
        self.best_param = math.nan
        self.best_value = math.inf
        self.count = 0

    def __call__(self, x: float) -> float:
        value = self._evaluate(x)
        self.count += 1
        if value < self.best_value:
            self.best_value = value
            self.best_param = x
        return value


def gss(f: Callable[[float], float], a: float, b: float, tol: float = 1e-5) -> tuple[float, float]:
    """
    Golden-section search.

    [a, b] 에서 극소가 하나인 f 에 대해 극소를 담는 길이 tol 이하의 구간을 돌려줍니다.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return a, d
    return c, b


def _dense_grid(lo: float, hi: float, step: float) -> list[float]:
    count = int(math.floor((hi - lo) / step + 1e-9))
    grid = [lo + i * step for i in range(count + 1)]
    if hi - grid[-1] > 1e-12:
        grid.append(hi)
    return grid


def find_infimum(
    family: str,
    param: str,
    lo: float,
    hi: float,
    tol: float = 1e-4,
    fixed: dict[str, Any] | None = None,
    variant: BandVariant | str | None = None,
    coarse_points: int = COARSE_POINTS,
) -> InfimumReport:
    """
    [lo, hi] 위에서 J 의 하한을 찾습니다.

    attained 는 최소점이 탐색 구간 경계 tol 안에 있거나, 격자 계열에서
    불연속점 바로 옆의 한쪽 극한일 때 False 입니다.
    """
    if not lo < hi:
        raise DomainError(f"search range must satisfy lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")

    name, variant = resolve_family(family, variant)
    record = _Recorder(make_evaluator(name, param, fixed, variant))
    lattice = get_family_registry().get_family(name).lattice

    if lattice:
        grid = _dense_grid(lo, hi, min(tol, DENSE_STEP))
        values = [record(x) for x in grid]
        i = min(range(len(grid)), key=values.__getitem__)
        neighbours = [values[j] for j in (i - 1, i + 1) if 0 <= j < len(values)]
        one_sided = any(v - values[i] > JUMP_TOL for v in neighbours)
        logger.debug(f"{name} {param}: 조밀 격자 {len(grid)} 점, 최소 {values[i]!r} @ {grid[i]!r}")
    else:
        if lo > 0 and hi / lo >= 100:
            grid = geomspace(lo, hi, coarse_points)
        else:
            grid = linspace(lo, hi, coarse_points)
        values = [record(x) for x in grid]
        i = min(range(len(grid)), key=values.__getitem__)
        a = grid[max(i - 1, 0)]
        b = grid[min(i + 1, len(grid) - 1)]
        gss(record, a, b, tol)
        one_sided = False
        logger.debug(f"{name} {param}: 성긴 격자 최소 @ {grid[i]!r}, 황금분할 [{a!r}, {b!r}]")

    at_boundary = record.best_param - lo <= tol or hi - record.best_param <= tol
    return InfimumReport(
        family=name,
        param=param,
        param_at_inf=record.best_param,
        inf_value=record.best_value,
        attained=not (at_boundary or one_sided),
        evaluations=record.count,
    )
