"""
내장 검증 모음 (verify-all)

각 계열의 기준 매개변수에서 닫힌 형태와 오라클을 비교하고, 그림 불변량,
단조성, 하한, 몬테카를로 반례를 확인해 VerificationReport 로 모읍니다.
"""
import math
from typing import Callable

from ..catalog import PerturbedPoisson, Poisson, parse_dist
from ..config import NumericConfig
from ..coverage import (
    BandVariant,
    ThresholdKind,
    check_student_t_routes,
    j_closed,
    j_discrete,
    j_perturbed_poisson,
    j_student_t,
    j_student_t_beta,
    student_t_ratio_integral,
    threshold,
    weibull_clamp_binds,
)
from ..coverage.closed import j_inverse_gaussian, j_lognormal
from ..errors import SigbandError
from ..logging import get_logger
from ..oracle import j_enumeration, j_mc_compound_poisson, j_quadrature
from ..specfun import contiguous_relation_residual
from ..sweep import (
    Direction,
    check_monotone,
    figure_dataset,
    find_infimum,
    geomspace,
    linspace,
    make_dist_builder,
    sweep_family,
)
from ..sweep.table import SweepRow, SweepTable
from .records import PropertyCheck, VerificationRecord, VerificationReport

logger = get_logger("sigband.report.suite")

# (명세 문자열, 기준값 초과 기대, 분류): 연속 계열마다 7개 점
CONTINUOUS_CASES: list[tuple[str, bool, str]] = [
    ("laplace:mu=0,b=1", True, "printed value"),
    ("laplace:mu=5,b=2", True, "location-scale duplicate"),
    ("laplace:mu=-3,b=0.1", True, "location-scale duplicate"),
    ("laplace:mu=0,b=250", True, "location-scale duplicate"),
    ("laplace:mu=1e6,b=1", True, "location-scale duplicate"),
    ("laplace:mu=-0.5,b=7", True, "location-scale duplicate"),
    ("laplace:mu=0,b=1e-4", True, "location-scale duplicate"),
    ("gumbel:mu=0,beta=1", True, "printed value"),
    ("gumbel:mu=-3,beta=7", True, "location-scale duplicate"),
    ("gumbel:mu=2,beta=0.1", True, "location-scale duplicate"),
    ("gumbel:mu=0,beta=250", True, "location-scale duplicate"),
    ("gumbel:mu=1e6,beta=1", True, "location-scale duplicate"),
    ("gumbel:mu=-0.5,beta=3", True, "location-scale duplicate"),
    ("gumbel:mu=0,beta=1e-4", True, "location-scale duplicate"),
    ("logistic:mu=0,s=1", True, "printed value"),
    ("logistic:mu=2,s=0.5", True, "location-scale duplicate"),
    ("logistic:mu=-3,s=0.1", True, "location-scale duplicate"),
    ("logistic:mu=0,s=250", True, "location-scale duplicate"),
    ("logistic:mu=1e6,s=1", True, "location-scale duplicate"),
    ("logistic:mu=-0.5,s=7", True, "location-scale duplicate"),
    ("logistic:mu=0,s=1e-4", True, "location-scale duplicate"),
    ("uniform:a=0,b=1", False, "counterexample"),
    ("uniform:a=-3,b=5", False, "location-scale duplicate"),
    ("uniform:a=-1,b=1", False, "location-scale duplicate"),
    ("uniform:a=10,b=10.001", False, "location-scale duplicate"),
    ("uniform:a=-500,b=500", False, "location-scale duplicate"),
    ("uniform:a=1e6,b=1000002", False, "location-scale duplicate"),
    ("uniform:a=-0.25,b=0", False, "location-scale duplicate"),
    ("beta:alpha=2,beta=1", False, "counterexample"),
    ("beta:alpha=2,beta=2", False, "counterexample"),
    ("beta:alpha=1,beta=1", False, "counterexample"),
    ("beta:alpha=0.5,beta=0.5", False, "counterexample"),
    ("beta:alpha=2,beta=20", True, "printed value"),
    ("beta:alpha=20,beta=2", True, "mirror"),
    ("beta:alpha=1,beta=20", True, "parameter sample"),
    ("weibull:lambda=1,k=3", False, "counterexample"),
    ("weibull:lambda=2.5,k=3", False, "location-scale duplicate"),
    ("weibull:lambda=1,k=2", False, "counterexample"),
    ("weibull:lambda=1,k=1", True, "printed value"),
    ("weibull:lambda=3,k=1", True, "location-scale duplicate"),
    ("weibull:lambda=1,k=0.5", True, "printed value"),
    ("weibull:lambda=2,k=0.5", True, "location-scale duplicate"),
    ("pareto:xm=1,alpha=3", True, "printed value"),
    ("pareto:xm=4,alpha=3", True, "location-scale duplicate"),
    ("pareto:xm=1,alpha=2.5", True, "parameter sample"),
    ("pareto:xm=1,alpha=10", True, "parameter sample"),
    ("pareto:xm=2,alpha=10", True, "location-scale duplicate"),
    ("pareto:xm=1,alpha=100", True, "parameter sample"),
    ("pareto:xm=1,alpha=1000000", True, "printed value"),
    ("gamma:alpha=0.5,beta=1", True, "printed value"),
    ("gamma:alpha=1,beta=1", True, "parameter sample"),
    ("gamma:alpha=2,beta=1", True, "parameter sample"),
    ("gamma:alpha=2,beta=3", True, "location-scale duplicate"),
    ("gamma:alpha=5,beta=1", True, "parameter sample"),
    ("gamma:alpha=10,beta=2", True, "parameter sample"),
    ("gamma:alpha=100,beta=1", True, "printed value"),
    ("lognormal:mu=0,sigma=1", True, "printed value"),
    ("lognormal:mu=2,sigma=1", True, "location-scale duplicate"),
    ("lognormal:mu=0,sigma=0.01", True, "printed value"),
    ("lognormal:mu=0,sigma=0.5", True, "parameter sample"),
    ("lognormal:mu=-1,sigma=0.5", True, "location-scale duplicate"),
    ("lognormal:mu=0,sigma=1.5", True, "parameter sample"),
    ("lognormal:mu=0,sigma=2", True, "printed value"),
    ("studentt:nu=3", True, "printed value"),
    ("studentt:nu=4", True, "parameter sample"),
    ("studentt:nu=5", True, "printed value"),
    ("studentt:nu=7.5", True, "parameter sample"),
    ("studentt:nu=10", True, "parameter sample"),
    ("studentt:nu=30", True, "printed value"),
    ("studentt:nu=60", True, "parameter sample"),
    ("invgaussian:mu=1,lambda=1", True, "printed value"),
    ("invgaussian:mu=4,lambda=1", True, "printed value"),
    ("invgaussian:mu=8,lambda=2", True, "location-scale duplicate"),
    ("invgaussian:mu=3,lambda=3", True, "location-scale duplicate"),
    ("invgaussian:mu=1,lambda=2", True, "parameter sample"),
    ("invgaussian:mu=1,lambda=0.5", True, "parameter sample"),
    ("invgaussian:mu=0.5,lambda=5", True, "parameter sample"),
    ("perturbedpoisson:eps=0.01", False, "counterexample"),
    ("perturbedpoisson:eps=0.002", False, "counterexample"),
    ("perturbedpoisson:eps=0.005", False, "counterexample"),
    ("perturbedpoisson:eps=0.02", False, "counterexample"),
    ("perturbedpoisson:eps=0.05", False, "counterexample"),
    ("perturbedpoisson:eps=0.1", False, "counterexample"),
    ("perturbedpoisson:eps=0.2", False, "counterexample"),
]

# (명세 문자열, 변형, 기준값 초과 기대)
LATTICE_CASES: list[tuple[str, BandVariant, bool]] = [
    ("geometric:p=0.75", BandVariant.GEOMETRIC_CORRECTED, True),
    ("geometric:p=0.5", BandVariant.GEOMETRIC_CORRECTED, True),
    ("negbinomial:n=2,p=0.45", BandVariant.PLAIN, False),
    ("negbinomial:n=2,p=0.45", BandVariant.NB_CORRECTED, True),
    ("negbinomial:n=10,p=0.3", BandVariant.NB_CORRECTED, True),
    ("poisson:lambda=3", BandVariant.PLAIN, False),
    ("poisson:lambda=3", BandVariant.POISSON_CORRECTED, True),
    ("poisson:lambda=10", BandVariant.POISSON_CORRECTED, True),
]

# 출판된 값 (명세 문자열, 변형, 값, 허용 오차)
PRINTED_VALUES: list[tuple[str, BandVariant, float, float]] = [
    ("laplace:mu=0,b=1", BandVariant.PLAIN, 0.7568833, 5e-7),
    ("gumbel:mu=0,beta=1", BandVariant.PLAIN, 0.723751, 5e-7),
    ("logistic:mu=0,s=1", BandVariant.PLAIN, 0.719641, 5e-7),
    ("weibull:lambda=1,k=3", BandVariant.PLAIN, 0.667713, 5e-7),
    ("uniform:a=0,b=1", BandVariant.PLAIN, 2.0 / math.sqrt(12.0), 1e-12),
    ("geometric:p=0.75", BandVariant.GEOMETRIC_CORRECTED, 0.9375, 1e-12),
    ("negbinomial:n=2,p=0.45", BandVariant.PLAIN, 0.6339326, 5e-8),
    ("poisson:lambda=3", BandVariant.PLAIN, 0.616115, 5e-7),
]

I_P3 = 0.616115
EXPONENTIAL_LIMIT = -math.expm1(-2.0)
LAPLACE_VALUE = -math.expm1(-math.sqrt(2.0))
STUDENT_T_RANGE = range(3, 61)
CONTIGUOUS_RANGE = range(3, 101)
MC_COMPOUND_N = 100


class VerificationSuite:
    """verify-all 검증 모음"""

    def __init__(self, config: NumericConfig, workers: int = 1):
        self.config = config
        self.workers = workers
        self.level = threshold(config.threshold)
        self.quad_tol = max(1e-13, min(1e-10, config.tol / 10.0))
        self.records: list[VerificationRecord] = []
        self.checks: list[PropertyCheck] = []

    def sections(self) -> list[tuple[str, Callable[[], None]]]:
        return [
            ("closed forms vs quadrature", self.verify_continuous),
            ("lattice summation", self.verify_lattice),
            ("printed values", self.verify_printed_values),
            ("limits", self.verify_limits),
            ("student t routes", self.verify_student_t),
            ("figures", self.verify_figures),
            ("inequality grids", self.verify_grids),
            ("monotonicity", self.verify_monotonicity),
            ("stability", self.verify_stability),
            ("infima", self.verify_infima),
            ("monte carlo", self.verify_monte_carlo),
        ]

    def run(self, on_section: Callable[[str], None] | None = None) -> VerificationReport:
        for name, section in self.sections():
            if on_section:
                on_section(name)
            logger.info(f"검증 구간 시작: {name}")
            try:
                section()
            except SigbandError as e:
                logger.error(f"검증 구간 실패: {name}: {e}")
                self.checks.append(PropertyCheck(name=name, passed=False, detail=str(e)))
        report = VerificationReport(
            threshold_kind=ThresholdKind(self.config.threshold),
            tolerance=self.config.tol,
            seed=self.config.seed,
            samples=self.config.samples,
            records=self.records,
            checks=self.checks,
        )
        return report.summarize()

    def _check(self, name: str, passed: bool, detail: str = "", flagged: bool = False) -> None:
        if not passed:
            logger.warning(f"검사 실패: {name}: {detail}")
        self.checks.append(PropertyCheck(name=name, passed=passed, detail=detail, flagged=flagged))

    def verify_continuous(self) -> None:
        for text, expected, label in CONTINUOUS_CASES:
            dist = parse_dist(text)
            check = f"closed form vs quadrature ({label})"
            try:
                closed = j_closed(dist, self_check=True).value
                oracle = j_quadrature(dist, tol=self.quad_tol, limit=self.config.quad_limit)
            except SigbandError as e:
                self.records.append(VerificationRecord.failure(check, dist, expected, str(e)))
                continue
            self.records.append(VerificationRecord.make(
                check, dist.family, dist.params(), closed, oracle.value,
                self.config.tol, expected, self.level,
                note=f"quadrature error estimate {oracle.err_estimate:.2e}",
            ))

    def verify_lattice(self) -> None:
        for text, variant, expected in LATTICE_CASES:
            dist = parse_dist(text)
            closed = j_discrete(dist, variant).value
            oracle = j_enumeration(dist, variant).value
            self.records.append(VerificationRecord.make(
                f"summation vs enumeration ({variant.value})", dist.family, dist.params(),
                closed, oracle, self.config.tol, expected, self.level,
            ))

    def verify_printed_values(self) -> None:
        for text, variant, printed, tol in PRINTED_VALUES:
            dist = parse_dist(text)
            if dist.lattice:
                value = j_discrete(dist, variant).value
            else:
                value = j_closed(dist).value
            self.records.append(VerificationRecord.make(
                f"printed value ({variant.value})", dist.family, dist.params(),
                value, printed, tol, printed > self.level, self.level,
            ))

    def verify_limits(self) -> None:
        limits = [
            ("pareto:xm=1,alpha=1000000", EXPONENTIAL_LIMIT, 1e-5),
            ("lognormal:mu=0,sigma=0.01", self.level, 2e-3),
            ("studentt:nu=10000", self.level, 2e-3),
            ("invgaussian:mu=0.000001,lambda=1", self.level, 2e-3),
        ]
        for text, limit, tol in limits:
            dist = parse_dist(text)
            value = j_closed(dist).value
            self.records.append(VerificationRecord.make(
                "limit", dist.family, dist.params(), value, limit, tol, True, self.level,
            ))
        dist = PerturbedPoisson(eps=0.001)
        value = j_perturbed_poisson(dist.eps).value
        self.records.append(VerificationRecord.make(
            "limit", dist.family, dist.params(), value, I_P3, 1e-4, False, self.level,
        ))

    def verify_student_t(self) -> None:
        for nu in STUDENT_T_RANGE:
            primary = j_student_t(float(nu))
            secondary = j_student_t_beta(float(nu))
            self.records.append(VerificationRecord.make(
                "student t 2F1 route vs incomplete beta route", "studentt", {"nu": nu},
                primary, secondary, 1e-10, True, self.level,
            ))
        residuals = [abs(contiguous_relation_residual(float(nu))) for nu in CONTIGUOUS_RANGE]
        worst = max(residuals)
        self._check("contiguous relation residual", worst <= 1e-10, f"max residual {worst:.2e}")
        ratios = [student_t_ratio_integral(float(nu)) for nu in STUDENT_T_RANGE]
        smallest = min(ratios)
        self._check("student t ratio integral exceeds 1", smallest > 1.0, f"min {smallest!r}")

    def verify_figures(self) -> None:
        for fig_id in range(1, 10):
            table = figure_dataset(fig_id, self.config.threshold, workers=self.workers)
            low = table.min_row()
            if fig_id == 1:
                signs = {row.excess > 0 for row in table.rows}
                self._check("figure 1 excess changes sign", signs == {True, False},
                            f"min {low.coverage!r} at beta={low.param!r}")
                self.records.append(self._figure_minimum("figure 1 dip", table, low, False))
            elif fig_id == 2:
                row = table.nearest(3.0)
                self._check("figure 2 below threshold near k=3", row.excess < 0,
                            f"k={row.param!r} excess {row.excess!r}")
            elif fig_id == 3:
                self._check("figure 3 coverage at least 0.75", low.coverage >= 0.75 - 1e-12,
                            f"min {low.coverage!r} at p={low.param!r}")
            elif fig_id == 4:
                row = table.nearest(0.45)
                self.records.append(VerificationRecord.make(
                    "figure 4 value at p=0.45", table.family, {"n": 2, "p": row.param},
                    row.coverage, 0.6339326, 5e-8, False, self.level,
                ))
            else:
                self.records.append(self._figure_minimum(f"figure {fig_id} minimum", table, low, True))

    def _figure_minimum(self, check: str, table: SweepTable, low: SweepRow,
                        expected: bool) -> VerificationRecord:
        """그림의 최소 행을 구적법 또는 전수 합산으로 다시 계산해 비교"""
        dist = make_dist_builder(table.family, table.param, table.fixed)(low.param)
        if dist.lattice:
            oracle = j_enumeration(dist, table.variant)
        else:
            oracle = j_quadrature(dist, tol=self.quad_tol, limit=self.config.quad_limit)
        return VerificationRecord.make(
            check, table.family, dist.params(), low.coverage, oracle.value,
            self.config.tol, expected, self.level,
            note=f"minimum at {table.param}={low.param!r}, {oracle.method.value} oracle",
        )

    def _grid_above(self, name: str, family: str, param: str, grid: list[float],
                    level: float, fixed: dict | None = None) -> None:
        table = sweep_family(family, param, grid, fixed=fixed, workers=self.workers)
        low = table.min_row()
        self._check(name, low.coverage > level, f"min {low.coverage!r} at {param}={low.param!r}")

    def verify_grids(self) -> None:
        level = self.level
        self._grid_above("gamma above threshold", "gamma", "alpha", geomspace(0.05, 1e4, 80), level)
        self._grid_above("lognormal above threshold", "lognormal", "sigma", linspace(0.01, 3.0, 300), level)
        self._grid_above("student t above threshold", "studentt", "nu",
                         [float(nu) for nu in range(3, 101)], level)
        self._grid_above("inverse gaussian above threshold", "invgaussian", "mu",
                         geomspace(1e-6, 1e6, 61), level, fixed={"lambda": 1.0})
        for family, scale in (("laplace", "b"), ("gumbel", "beta"), ("logistic", "s")):
            self._grid_above(f"{family} above threshold", family, scale,
                             [0.1, 1.0, 7.0, 250.0], level, fixed={"mu": -3.0})
        self._grid_above("pareto above exponential limit", "pareto", "alpha",
                         [2.1, 3.0, 10.0, 100.0, 1e4, 1e6], EXPONENTIAL_LIMIT)
        self._grid_above("weibull k<=1 above laplace value", "weibull", "k",
                         linspace(0.05, 1.0, 40), LAPLACE_VALUE - 1e-12)
        binds = [weibull_clamp_binds(k) for k in linspace(0.05, 1.0, 40)]
        self._check("weibull lower clamp binds for k<=1", all(binds),
                    f"{binds.count(False)} points without clamp")
        distances = [abs(j_perturbed_poisson(eps).value - I_P3) for eps in (0.2, 0.1, 0.05, 0.01)]
        closer = all(b < a for a, b in zip(distances, distances[1:]))
        self._check("perturbed poisson approaches limit", closer,
                    ", ".join(f"{d:.3e}" for d in distances))

    def verify_monotonicity(self) -> None:
        tables = [
            ("pareto decreasing in alpha", sweep_family(
                "pareto", "alpha", [2.1, 3.0, 10.0, 100.0, 1e4, 1e6], fixed={"xm": 1.0}),
             Direction.DECREASING),
            ("student t decreasing along odd nu", sweep_family(
                "studentt", "nu", [float(nu) for nu in range(3, 62, 2)]), Direction.DECREASING),
            ("student t decreasing along even nu", sweep_family(
                "studentt", "nu", [float(nu) for nu in range(4, 61, 2)]), Direction.DECREASING),
            ("lognormal increasing in sigma", sweep_family(
                "lognormal", "sigma", linspace(0.01, 3.0, 300)), Direction.INCREASING),
        ]
        for name, table, direction in tables:
            violations = check_monotone(table, direction)
            self._check(name, not violations, f"{len(violations)} violations")

        # 간격 1 의 단조성은 관찰로만 기록합니다
        step_one = sweep_family("studentt", "nu", [float(nu) for nu in range(3, 62)])
        violations = check_monotone(step_one, Direction.DECREASING)
        if violations:
            logger.warning(f"Student t 간격 1 단조성 위반 {len(violations)}건 (실패로 치지 않음)")
        self._check("student t decreasing along consecutive nu", True,
                    f"{len(violations)} violations", flagged=bool(violations))

    def verify_stability(self) -> None:
        values = [j_inverse_gaussian(ratio, 1.0) for ratio in geomspace(1e-8, 1e8, 33)]
        self._check("inverse gaussian finite on mu/lambda in [1e-8, 1e8]",
                    all(0.0 < v < 1.0 and math.isfinite(v) for v in values),
                    f"range [{min(values)!r}, {max(values)!r}]")
        gap = abs(j_inverse_gaussian(1.0 - 1e-9, 1.0) - j_inverse_gaussian(1.0 + 1e-9, 1.0))
        self._check("inverse gaussian branch continuity", gap <= 1e-7, f"gap {gap:.2e}")
        edge = math.sqrt(math.log(2.0))
        gap = abs(j_lognormal(edge - 1e-9) - j_lognormal(edge + 1e-9))
        self._check("lognormal branch continuity", gap <= 1e-7, f"gap {gap:.2e}")
        for nu in (3.0, 7.5, 60.0):
            check_student_t_routes(nu)

    def verify_infima(self) -> None:
        searches = [
            ("lognormal", "sigma", 0.005, 4.0, 1e-4, None, self.level, 2e-3),
            ("gamma", "alpha", 0.05, 1e4, 1e-3, None, self.level, 2e-3),
            ("studentt", "nu", 3.0, 1e4, 1e-3, None, self.level, 2e-3),
            ("invgaussian", "mu", 1e-6, 1e3, 1e-9, {"lambda": 1.0}, self.level, 2e-3),
            ("geometric_j", "p", 0.01, 0.999, 1e-4, None, 0.75, 1e-3),
        ]
        for family, param, lo, hi, tol, fixed, limit, allowed in searches:
            report = find_infimum(family, param, lo, hi, tol, fixed=fixed)
            self.records.append(VerificationRecord.make(
                "infimum", report.family, {f"{param}_lo": lo, f"{param}_hi": hi},
                report.inf_value, limit, allowed, True, self.level,
                note=f"at {param}={report.param_at_inf!r}, attained={report.attained}",
            ))
            self._check(f"{family} infimum not attained", not report.attained,
                        f"{param}={report.param_at_inf!r}")

    def verify_monte_carlo(self) -> None:
        est = j_mc_compound_poisson(
            MC_COMPOUND_N, self.config.samples, self.config.seed,
            workers=self.workers, chunk=self.config.mc_chunk,
        )
        limit = j_discrete(Poisson(lam=3.0), BandVariant.PLAIN).value
        self.records.append(VerificationRecord.make(
            "monte carlo counterexample", "compound_poisson_uniform", {"n": MC_COMPOUND_N},
            limit, est.estimate, 4.0 * est.stderr + 0.001, False, self.level,
            exceeds=est.upper_99 > self.level,
            note=f"upper 99% bound {est.upper_99!r}, stderr {est.stderr!r}",
        ))
