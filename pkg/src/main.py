"""sigband CLI 진입점"""

from typing import Callable, Optional

import typer
from pydantic import ValidationError
from typing_extensions import Annotated

# 프로젝트 모듈 import
from sigband.catalog.parser import validation_message
from sigband.commands import CheckCommand, InfoCommand, McCommand, SetupCommand, SweepCommand, VerifyCommand
from sigband.config import PROJECT_ROOT, check_settings, get_numeric_config, get_version, get_workers, load_config_file
from sigband.coverage import BandVariant, ThresholdKind
from sigband.errors import SigbandError
from sigband.logging import get_logger, setup_logging
from sigband.utils import CommonOptions, OutputFormat, err_console, output_result, print_error

logger = get_logger("sigband.main")

# 전역 상태 저장
state = {"options": None}

app = typer.Typer(help="1-표준편차 구간 확률 검증 CLI", rich_markup_mode="markdown")

# 종료 코드
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def run_command(action: Callable[[], int]) -> None:
    """
    명령어를 실행하고 종료 코드로 끝냅니다.

    검증/파싱/설정/입출력 오류는 한 줄 메시지와 종료 코드 2 가 됩니다.
    """
    options = state["options"]
    try:
        code = action()
    except (SigbandError, ValidationError, OSError) as e:
        message = validation_message(e) if isinstance(e, ValidationError) else str(e)
        logger.debug(f"명령 실패 ({type(e).__name__}): {message}")
        print_error(message)
        if options and options.verbose:
            err_console.print_exception()
        raise typer.Exit(EXIT_USAGE)
    raise typer.Exit(code or EXIT_OK)


def numeric_config(**overrides):
    return get_numeric_config(**{k: v.value if hasattr(v, "value") else v for k, v in overrides.items()})


@app.callback()
def main_callback(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="상세 출력 모드")] = False,
    quiet: Annotated[bool, typer.Option("--quiet", "-q", help="조용한 모드")] = False,
    output_format: Annotated[OutputFormat, typer.Option("--output", "-o", help="출력 형식")] = OutputFormat.text,
    config_file: Annotated[str, typer.Option("--config", "-c", help="`key = value` 설정 파일 경로")] = None,
):
    """공통 옵션 설정"""
    state["options"] = CommonOptions(
        verbose=verbose,
        quiet=quiet,
        output_format=output_format,
        config_file=config_file,
    )

    # loguru 로깅 설정
    setup_logging(verbose, quiet)

    # settings.yaml 이 없으면 내장 기본값
    if not check_settings() and verbose:
        err_console.print("[dim]settings.yaml 이 없어 기본값을 사용합니다 (sigband setup)[/dim]")

    if config_file:
        try:
            load_config_file(config_file)
        except SigbandError as e:
            print_error(str(e))
            raise typer.Exit(EXIT_USAGE)


@app.command()
def check(
    spec: Annotated[str, typer.Argument(help="분포 명세 `family:key=value,...` (예: lognormal:mu=0,sigma=1.5)")],
    variant: Annotated[BandVariant, typer.Option("--variant", help="구간 변형")] = BandVariant.PLAIN,
    tol: Annotated[Optional[float], typer.Option("--tol", help="오라클 비교 허용 오차")] = None,
    threshold: Annotated[Optional[ThresholdKind], typer.Option("--threshold", help="기준값 (exact, paper)")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="몬테카를로 시드")] = None,
    samples: Annotated[Optional[int], typer.Option("--samples", help="몬테카를로 표본 수")] = None,
):
    """
    분포 하나의 적률, σ-구간, 포함 확률을 계산합니다.


    ## 사용법

    - sigband check laplace:mu=0,b=1
    - sigband check poisson:lambda=3 --variant poisson-corrected
    """
    def action() -> int:
        config = numeric_config(tol=tol, threshold=threshold, seed=seed, samples=samples)
        return CheckCommand(config, get_workers(config)).execute(spec, variant, state["options"])

    run_command(action)


@app.command("verify-all")
def verify_all(
    out: Annotated[Optional[str], typer.Option("--out", help="JSON 보고서 경로 (기본 .sigband/report.json)")] = None,
    tol: Annotated[Optional[float], typer.Option("--tol", help="닫힌 형태와 오라클의 허용 오차")] = None,
    threshold: Annotated[Optional[ThresholdKind], typer.Option("--threshold", help="기준값 (exact, paper)")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="몬테카를로 시드")] = None,
    samples: Annotated[Optional[int], typer.Option("--samples", help="몬테카를로 표본 수")] = None,
):
    """내장 검증 모음을 실행하고 보고서를 씁니다. 모두 통과하면 0, 실패가 있으면 1 로 끝납니다."""
    def action() -> int:
        config = numeric_config(tol=tol, threshold=threshold, seed=seed, samples=samples)
        return VerifyCommand(config, get_workers(config)).execute(out, state["options"])

    run_command(action)


@app.command()
def sweep(
    family: Annotated[str, typer.Argument(help="분포 계열 (`<family>_j` 는 보정 변형)")],
    param: Annotated[str, typer.Option("--param", help="스윕할 매개변수")],
    lo: Annotated[float, typer.Option("--lo", help="하한")],
    hi: Annotated[float, typer.Option("--hi", help="상한")],
    points: Annotated[int, typer.Option("--points", min=2, help="격자점 수")] = 200,
    log: Annotated[bool, typer.Option("--log", help="로그 등간격 격자")] = False,
    fixed: Annotated[Optional[str], typer.Option("--fixed", help="고정 매개변수 key=value,...")] = None,
    variant: Annotated[Optional[BandVariant], typer.Option("--variant", help="구간 변형")] = None,
    threshold: Annotated[Optional[ThresholdKind], typer.Option("--threshold", help="기준값 (exact, paper)")] = None,
    csv: Annotated[Optional[str], typer.Option("--csv", help="CSV 출력 경로")] = None,
    svg: Annotated[Optional[str], typer.Option("--svg", help="SVG 출력 경로")] = None,
):
    """매개변수 하나를 격자 위에서 스윕합니다. --csv 가 없으면 CSV 를 표준 출력으로 씁니다."""
    def action() -> int:
        config = numeric_config(threshold=threshold)
        command = SweepCommand(config, get_workers(config))
        return command.sweep(family, param, lo, hi, points, log, fixed, variant, csv, svg, state["options"])

    run_command(action)


@app.command()
def inf(
    family: Annotated[str, typer.Argument(help="분포 계열 (`geometric_j` 등은 보정 변형)")],
    param: Annotated[str, typer.Option("--param", help="탐색할 매개변수")],
    lo: Annotated[float, typer.Option("--lo", help="하한")],
    hi: Annotated[float, typer.Option("--hi", help="상한")],
    tol: Annotated[float, typer.Option("--tol", help="매개변수 분해능")] = 1e-4,
    fixed: Annotated[Optional[str], typer.Option("--fixed", help="고정 매개변수 key=value,...")] = None,
    variant: Annotated[Optional[BandVariant], typer.Option("--variant", help="구간 변형")] = None,
):
    """[lo, hi] 에서 포함 확률의 하한을 찾습니다."""
    def action() -> int:
        config = numeric_config()
        command = SweepCommand(config, get_workers(config))
        return command.inf(family, param, lo, hi, tol, fixed, variant, state["options"])

    run_command(action)


@app.command()
def fig(
    fig_id: Annotated[int, typer.Argument(help="그림 번호 (1-9)")],
    csv: Annotated[Optional[str], typer.Option("--csv", help="CSV 출력 경로")] = None,
    svg: Annotated[Optional[str], typer.Option("--svg", help="SVG 출력 경로")] = None,
    threshold: Annotated[Optional[ThresholdKind], typer.Option("--threshold", help="기준값 (exact, paper)")] = None,
):
    """그림 1-9 의 데이터셋을 만듭니다."""
    def action() -> int:
        config = numeric_config(threshold=threshold)
        command = SweepCommand(config, get_workers(config))
        return command.fig(fig_id, csv, svg, state["options"])

    run_command(action)


@app.command()
def mc(
    spec: Annotated[Optional[str], typer.Argument(help="분포 명세 (없으면 compound_poisson_uniform:n=N)")] = None,
    n: Annotated[int, typer.Option("--n", min=1, help="복합 포아송의 n")] = 100,
    seed: Annotated[Optional[int], typer.Option("--seed", help="시드 (부호 없는 64비트)")] = None,
    samples: Annotated[Optional[int], typer.Option("--samples", help="표본 수")] = None,
    threshold: Annotated[Optional[ThresholdKind], typer.Option("--threshold", help="기준값 (exact, paper)")] = None,
    csv: Annotated[Optional[str], typer.Option("--csv", help="CSV 출력 경로 (- 이면 표준 출력)")] = None,
):
    """몬테카를로로 구간 포함 확률을 추정합니다."""
    def action() -> int:
        config = numeric_config(seed=seed, samples=samples, threshold=threshold)
        return McCommand(config, get_workers(config)).execute(spec, n, csv, state["options"])

    run_command(action)


@app.command()
def info():
    """분포 계열 목록과 기준값을 출력합니다."""
    options = state["options"]
    version = get_version()

    info_command = InfoCommand(version)
    info_command.execute(options)


@app.command()
def version():
    """버전 정보를 출력합니다."""
    version = get_version()
    message = f"sigband v{version}"
    options = state["options"]
    output_result(message, options=options)


@app.command()
def setup():
    """설정 파일을 생성합니다."""
    setup_command = SetupCommand(PROJECT_ROOT)
    raise typer.Exit(setup_command.execute())


def main():
    """메인 진입점"""
    app()


if __name__ == "__main__":
    main()
