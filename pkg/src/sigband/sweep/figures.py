"""
그림 1-9 의 데이터셋
"""
from typing import Callable

from pydantic import BaseModel, ConfigDict

from ..coverage import BandVariant, ThresholdKind
from ..errors import DomainError
from .runner import linspace, sweep_family
from .table import SweepTable

DEFAULT_POINTS = 400
POISSON_POINTS = 1000
# p = i/400, i = 1..399 (p = 1 은 분산 0 으로 퇴화)
PROBABILITY_GRID = [i / DEFAULT_POINTS for i in range(1, DEFAULT_POINTS)]


class FigureSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    title: str
    family: str
    param: str
    variant: BandVariant
    fixed: dict[str, float] = {}


def _figure_specs() -> dict[int, FigureSpec]:
    specs = [
        FigureSpec(id=1, title="J(Beta(2, beta)) - threshold, beta in [1, 20]",
                   family="beta", param="beta", variant=BandVariant.PLAIN, fixed={"alpha": 2.0}),
        FigureSpec(id=2, title="W_k - threshold, k in [1, 10]",
                   family="weibull", param="k", variant=BandVariant.PLAIN, fixed={"lambda": 1.0}),
        FigureSpec(id=3, title="J_G(p)",
                   family="geometric", param="p", variant=BandVariant.GEOMETRIC_CORRECTED),
        FigureSpec(id=4, title="I_NB(2, p)",
                   family="negbinomial", param="p", variant=BandVariant.PLAIN, fixed={"n": 2}),
    ]
    for fig_id, n in zip((5, 6, 7, 8), (2, 3, 10, 1000)):
        specs.append(FigureSpec(id=fig_id, title=f"J_NB({n}, p)",
                                family="negbinomial", param="p",
                                variant=BandVariant.NB_CORRECTED, fixed={"n": n}))
    specs.append(FigureSpec(id=9, title="J_P(lambda), lambda in (0, 100]",
                            family="poisson", param="lambda",
                            variant=BandVariant.POISSON_CORRECTED))
    return {spec.id: spec for spec in specs}


FIGURES = _figure_specs()

_GRIDS: dict[int, Callable[[], list[float]]] = {
    1: lambda: linspace(1.0, 20.0, DEFAULT_POINTS),
    2: lambda: linspace(1.0, 10.0, DEFAULT_POINTS),
    9: lambda: linspace(0.01, 100.0, POISSON_POINTS),
}


def figure_grid(fig_id: int) -> list[float]:
    return _GRIDS.get(fig_id, lambda: list(PROBABILITY_GRID))()


def figure_dataset(
    fig_id: int,
    threshold_kind: ThresholdKind | str = ThresholdKind.EXACT,
    workers: int = 1,
) -> SweepTable:
    """
    그림 번호의 스윕 표.

    Raises:
        DomainError: 1..9 밖의 번호
    """
    spec = FIGURES.get(fig_id)
    if spec is None:
        raise DomainError(f"figure id must be in 1..9, got {fig_id}")
    return sweep_family(
        spec.family,
        spec.param,
        figure_grid(fig_id),
        fixed=spec.fixed,
        variant=spec.variant,
        threshold_kind=threshold_kind,
        workers=workers,
        title=spec.title,
    )
