"""
몬테카를로 명령어 비즈니스 로직
"""

from ..catalog import CompoundPoissonUniform, parse_dist
from ..config import NumericConfig
from ..coverage import threshold
from ..logging import get_logger
from ..oracle import j_mc_generic
from ..report import estimate_to_csv, write_estimate_csv
from ..utils.output_utils import CommonOptions, OutputFormat, console, emit, emit_json

logger = get_logger("sigband.commands.mc")

STDOUT = "-"


class McCommand:
    """mc 명령어 처리 클래스"""

    def __init__(self, config: NumericConfig, workers: int = 1):
        self.config = config
        self.workers = workers

    def execute(self, spec: str = None, n: int = None, csv: str = None,
                options: CommonOptions = None) -> int:
        """
        몬테카를로로 구간 포함 확률을 추정합니다.

        Args:
            spec: 분포 명세 (없으면 복합 포아송 Y_n)
            n: 복합 포아송의 n (spec 이 없을 때, 기본 100)
            csv: CSV 출력 경로, "-" 이면 요약 대신 CSV 를 stdout 으로
        """
        dist = parse_dist(spec) if spec else CompoundPoissonUniform(n=n or 100)
        est = j_mc_generic(
            dist, self.config.samples, self.config.seed,
            workers=self.workers, chunk=self.config.mc_chunk,
        )
        level = threshold(self.config.threshold)
        logger.info(f"MC 완료: {dist} estimate={est.estimate!r}")

        if csv == STDOUT:
            console.file.write(estimate_to_csv(dist, est))
            return 0
        if csv:
            write_estimate_csv(dist, est, csv)
            logger.info(f"CSV 저장: {csv}")

        if options and options.output_format == OutputFormat.json:
            emit_json({
                "family": dist.family,
                "params": dist.params(),
                **est.model_dump(),
                "lower_99": est.lower_99,
                "upper_99": est.upper_99,
                "threshold": level,
                "upper_below_threshold": est.upper_99 < level,
            })
            return 0

        emit(f"{dist}: estimate={est.estimate:.7f} stderr={est.stderr:.2e} "
             f"n_samples={est.n_samples} seed={est.seed}", options)
        emit(f"99% interval [{est.lower_99:.7f}, {est.upper_99:.7f}], "
             f"upper bound below threshold {level:.10g}: {est.upper_99 < level}", options)
        return 0
