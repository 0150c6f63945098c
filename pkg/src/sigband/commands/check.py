"""
단일 분포 검사 명령어 비즈니스 로직
"""

from ..catalog import CompoundPoissonUniform, parse_dist
from ..config import NumericConfig
from ..coverage import BandVariant, band, coverage, threshold
from ..errors import QuadratureError
from ..logging import get_logger
from ..oracle import j_enumeration, j_mc_generic, j_quadrature
from ..utils.output_utils import CommonOptions, OutputFormat, emit, emit_json

logger = get_logger("sigband.commands.check")


class CheckCommand:
    """check 명령어 처리 클래스"""

    def __init__(self, config: NumericConfig, workers: int = 1):
        """
        Args:
            config: 수치 설정 (tol, seed, samples, threshold ...)
            workers: 몬테카를로 워커 수
        """
        self.config = config
        self.workers = workers

    def execute(self, spec: str, variant: BandVariant | None = None, options: CommonOptions = None) -> int:
        """
        분포 하나의 적률, 구간, 포함 확률, 기준값 비교를 출력합니다.

        Returns:
            종료 코드 (계산되면 0)
        """
        dist = parse_dist(spec)
        if variant is None:
            variant = BandVariant.PLAIN
        b = band(dist, variant)
        m = dist.moments()
        level = threshold(self.config.threshold)

        closed = None
        oracle_value = None
        oracle_method = None
        oracle_err = None
        if isinstance(dist, CompoundPoissonUniform):
            est = j_mc_generic(dist, self.config.samples, self.config.seed,
                               workers=self.workers, chunk=self.config.mc_chunk)
            oracle_value, oracle_method, oracle_err = est.estimate, "monte_carlo", est.stderr
            value = est.estimate
        else:
            closed = coverage(dist, variant)
            value = closed.value
            try:
                if dist.lattice:
                    oracle = j_enumeration(dist, variant)
                else:
                    oracle = j_quadrature(dist, tol=max(1e-13, self.config.tol / 10.0),
                                          limit=self.config.quad_limit)
                oracle_value, oracle_method, oracle_err = oracle.value, oracle.method.value, oracle.err_estimate
            except QuadratureError as e:
                logger.warning(f"구적법 오라클 실패: {e}")

        exceeds = value > level
        if options and options.output_format == OutputFormat.json:
            emit_json({
                "family": dist.family,
                "params": dist.params(),
                "mean": m.mean,
                "variance": m.variance,
                "band": {"lo": b.lo, "hi": b.hi, "lo_kind": b.lo_kind.value, "hi_kind": b.hi_kind.value},
                "variant": BandVariant(variant).value,
                "coverage_closed": None if closed is None else closed.value,
                "method": None if closed is None else closed.method.value,
                "coverage_oracle": oracle_value,
                "oracle_method": oracle_method,
                "oracle_err": oracle_err,
                "threshold": level,
                "exceeds_threshold": exceeds,
            })
            return 0

        emit(f"family: {dist.family}  ({dist})", options)
        emit(f"moments: mean={m.mean:.10g} variance={m.variance:.10g} sd={m.sd:.10g}", options)
        emit(f"band ({BandVariant(variant).value}): {b.describe()}", options)
        if closed is not None:
            emit(f"coverage ({closed.method.value}): {value:.7f}  [{value!r}]", options)
        if oracle_value is not None:
            emit(f"oracle ({oracle_method}): {oracle_value:.7f}  [err {oracle_err:.1e}]", options)
            if closed is not None:
                emit(f"|closed - oracle| = {abs(value - oracle_value):.2e}", options)
        relation = ">" if exceeds else "<="
        emit(f"threshold ({self.config.threshold}): {value:.7f} {relation} {level:.10g}  exceeds={exceeds}", options)
        return 0
