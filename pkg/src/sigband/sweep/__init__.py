"""
매개변수 스윕, 단조성/하한 검사, 그림 데이터셋
"""

from .table import SweepRow, SweepTable
from .runner import (
    Direction,
    Violation,
    check_monotone,
    geomspace,
    linspace,
    make_dist_builder,
    make_evaluator,
    resolve_family,
    sweep_family,
)
from .infimum import InfimumReport, find_infimum, gss
from .figures import FIGURES, figure_dataset, figure_grid

__all__ = [
    "SweepRow",
    "SweepTable",
    "Direction",
    "Violation",
    "check_monotone",
    "sweep_family",
    "resolve_family",
    "make_dist_builder",
    "make_evaluator",
    "linspace",
    "geomspace",
    "InfimumReport",
    "find_infimum",
    "gss",
    "FIGURES",
    "figure_dataset",
    "figure_grid",
]
