"""
스윕, 하한 탐색, 그림 데이터 명령어 비즈니스 로직
"""

from ..config import NumericConfig
from ..coverage import BandVariant
from ..errors import SpecParseError
from ..logging import get_logger
from ..report import table_to_csv, write_csv, write_svg
from ..sweep import SweepTable, figure_dataset, find_infimum, geomspace, linspace, sweep_family
from ..utils.output_utils import CommonOptions, OutputFormat, console, emit, emit_json

logger = get_logger("sigband.commands.sweep")


def parse_fixed(text: str | None) -> dict[str, str]:
    """`key=value,key=value` 고정 매개변수"""
    fixed: dict[str, str] = {}
    if not text:
        return fixed
    for item in text.split(","):
        key, eq, value = item.partition("=")
        if not eq or not key.strip() or not value.strip():
            raise SpecParseError(f"malformed fixed parameter '{item.strip()}' (expected key=value)")
        fixed[key.strip().lower()] = value.strip()
    return fixed


class SweepCommand:
    """sweep / inf / fig 명령어 처리 클래스"""

    def __init__(self, config: NumericConfig, workers: int = 1):
        self.config = config
        self.workers = workers

    def _emit_table(self, table: SweepTable, csv: str = None, svg: str = None,
                    options: CommonOptions = None) -> int:
        if csv:
            write_csv(table, csv)
            logger.info(f"CSV 저장: {csv} ({len(table)} 행)")
        if svg:
            write_svg(table, svg)
            logger.info(f"SVG 저장: {svg}")
        if options and options.output_format == OutputFormat.json:
            emit_json(table.model_dump(mode="json"))
        elif not csv:
            # 파일 지정이 없으면 CSV 를 stdout 으로
            console.file.write(table_to_csv(table))
        else:
            low = table.min_row()
            emit(f"{table.family} {table.param}: {len(table)} rows, min coverage {low.coverage:.7f} "
                 f"at {table.param}={low.param:.10g}, rows above threshold "
                 f"{sum(1 for row in table.rows if row.excess > 0)}/{len(table)}", options)
        return 0

    def sweep(self, family: str, param: str, lo: float, hi: float, points: int = 200,
              log: bool = False, fixed: str = None, variant: BandVariant = None,
              csv: str = None, svg: str = None, options: CommonOptions = None) -> int:
        """family 의 param 을 [lo, hi] 에서 points 개 점으로 스윕합니다."""
        grid = geomspace(lo, hi, points) if log else linspace(lo, hi, points)
        table = sweep_family(
            family, param, grid, fixed=parse_fixed(fixed), variant=variant,
            threshold_kind=self.config.threshold, workers=self.workers,
        )
        return self._emit_table(table, csv, svg, options)

    def fig(self, fig_id: int, csv: str = None, svg: str = None, options: CommonOptions = None) -> int:
        """그림 번호의 데이터셋을 만듭니다."""
        table = figure_dataset(fig_id, self.config.threshold, workers=self.workers)
        return self._emit_table(table, csv, svg, options)

    def inf(self, family: str, param: str, lo: float, hi: float, tol: float = None,
            fixed: str = None, variant: BandVariant = None, options: CommonOptions = None) -> int:
        """[lo, hi] 에서 포함 확률의 하한을 찾습니다."""
        report = find_infimum(
            family, param, lo, hi, tol if tol is not None else 1e-4,
            fixed=parse_fixed(fixed), variant=variant,
        )
        if options and options.output_format == OutputFormat.json:
            emit_json(report.model_dump())
        else:
            emit(
                f"inf = {report.inf_value:.7f} at {param}={report.param_at_inf:.10g}, "
                f"attained={str(report.attained).lower()} ({report.evaluations} evaluations)",
                options,
            )
        return 0
