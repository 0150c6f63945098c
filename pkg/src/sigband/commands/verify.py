"""
전체 검증 명령어 비즈니스 로직
"""

from pathlib import Path

from rich.progress import Progress, SpinnerColumn, TextColumn

from ..config import NumericConfig
from ..logging import get_logger
from ..report import VerificationSuite, write_report
from ..utils.output_utils import CommonOptions, OutputFormat, emit, emit_json, err_console

logger = get_logger("sigband.commands.verify")

DEFAULT_REPORT = Path(".sigband") / "report.json"


class VerifyCommand:
    """verify-all 명령어 처리 클래스"""

    def __init__(self, config: NumericConfig, workers: int = 1):
        self.config = config
        self.workers = workers

    def execute(self, out: str = None, options: CommonOptions = None) -> int:
        """
        내장 검증 모음을 실행하고 JSON 보고서를 씁니다.

        Returns:
            종료 코드 (모두 통과 0, 하나라도 실패 1)
        """
        out_path = Path(out) if out else DEFAULT_REPORT
        suite = VerificationSuite(self.config, workers=self.workers)

        show_progress = not (options and options.quiet)
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
            disable=not show_progress,
        ) as progress:
            task = progress.add_task("검증 준비 중...", total=None)
            report = suite.run(on_section=lambda name: progress.update(task, description=f"검증 중: {name}"))

        write_report(report, out_path)
        logger.info(f"보고서 저장: {out_path}")

        summary = report.summary
        if options and options.output_format == OutputFormat.json:
            emit_json({
                "report": str(out_path),
                "passed": report.all_passed,
                "summary": summary.model_dump(),
                "failures": report.failures(),
            })
        else:
            status = "PASS" if report.all_passed else "FAIL"
            emit(
                f"{status}: records {summary.records_passed}/{summary.records} passed, "
                f"checks {summary.checks_passed}/{summary.checks} passed, {summary.flagged} flagged",
                options,
            )
            for line in report.failures():
                emit(f"  failed: {line}", options)
            emit(f"report: {out_path}", options)
        return 0 if report.all_passed else 1
