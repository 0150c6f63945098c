"""
정보 출력 명령어 비즈니스 로직
"""

from rich.table import Table

from ..catalog import get_family_registry
from ..coverage import THRESHOLD_EXACT, THRESHOLD_PAPER, BandVariant
from ..logging import get_logger
from ..utils.output_utils import CommonOptions, OutputFormat, console, emit_json, err_console

logger = get_logger("sigband.commands.info")

DESCRIPTION = "1-표준편차 구간 확률 P{|X - E[X]| <= σ} 을 분포 계열별로 검증하는 CLI 도구입니다."


class InfoCommand:
    """정보 출력 명령어 처리 클래스"""

    def __init__(self, version: str):
        """
        Args:
            version: 애플리케이션 버전
        """
        self.version = version

    def execute(self, options: CommonOptions = None):
        """
        정보 출력 명령어 실행

        Args:
            options: 공통 옵션
        """
        registry = get_family_registry()
        family_info = registry.get_family_info()
        family_count = registry.get_family_count()

        if options and options.output_format == OutputFormat.json:
            emit_json({
                "name": "sigband",
                "version": self.version,
                "description": DESCRIPTION,
                "threshold_exact": THRESHOLD_EXACT,
                "threshold_paper": THRESHOLD_PAPER,
                "variants": [variant.value for variant in BandVariant],
                "families": {"count": family_count, "list": family_info},
            })
        elif not (options and options.quiet):
            console.print("[bold blue]sigband[/bold blue]")
            console.print(f"버전: {self.version}")
            console.print(DESCRIPTION)
            console.print()
            self._display_family_info(family_info, family_count)

        if options and options.verbose:
            err_console.print(f"[dim]설정 파일: {options.config_file or 'None'}[/dim]")

    def _display_family_info(self, family_info: list, family_count: dict):
        """
        계열 정보를 테이블로 표시

        Args:
            family_info: 계열 정보 목록
            family_count: 계열 개수 정보
        """
        console.print(
            f"총 {family_count['total']}개 계열 "
            f"(연속: {family_count['continuous']}개, 격자: {family_count['lattice']}개)"
        )
        console.print()

        table = Table(title="분포 계열")
        table.add_column("계열", style="cyan", no_wrap=True)
        table.add_column("매개변수", style="magenta")
        table.add_column("격자", style="yellow", width=6)
        table.add_column("설명", style="white")
        for family in family_info:
            table.add_row(
                family["name"],
                ", ".join(family["params"]),
                "예" if family["lattice"] else "",
                family["description"],
            )
        console.print(table)
        console.print()
