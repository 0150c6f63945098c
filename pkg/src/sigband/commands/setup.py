"""
설정 명령어 비즈니스 로직
"""

import shutil
from pathlib import Path

from rich.table import Table

from ..config import NumericConfig
from ..logging import get_logger
from ..utils.output_utils import console

logger = get_logger("sigband.commands.setup")


class SetupCommand:
    """settings.sample.yaml 로 settings.yaml 을 만드는 setup 명령어"""

    def __init__(self, project_root: Path):
        """
        Args:
            project_root: settings.yaml 을 둘 프로젝트 루트
        """
        self.settings_file = project_root / "settings.yaml"
        self.sample_file = project_root / "settings.sample.yaml"

    def execute(self) -> int:
        """
        템플릿을 복사합니다. 이미 있으면 건드리지 않습니다.

        Returns:
            종료 코드 (복사했거나 이미 있으면 0, 템플릿이 없거나 복사 실패면 2)
        """
        if self.settings_file.exists():
            console.print(f"[yellow]설정 파일이 이미 존재합니다: {self.settings_file}[/yellow]")
            return 0

        if not self.sample_file.exists():
            console.print(f"[red]템플릿 파일을 찾을 수 없습니다: {self.sample_file}[/red]")
            return 2

        try:
            shutil.copy2(self.sample_file, self.settings_file)
        except OSError as e:
            console.print(f"[red]설정 파일 생성 실패: {e}[/red]")
            logger.error(f"설정 파일 생성 실패: {e}")
            return 2

        console.print(f"[green]✅ 설정 파일이 생성되었습니다: {self.settings_file}[/green]")
        self._show_defaults()
        return 0

    def _show_defaults(self):
        """조정할 수 있는 수치 키와 기본값"""
        table = Table(title="수치 설정 기본값 (SIGBAND_<KEY> 로 덮어쓰기)")
        table.add_column("키", style="cyan", no_wrap=True)
        table.add_column("기본값", style="magenta")
        for name, field in NumericConfig.model_fields.items():
            table.add_row(name, str(field.default))
        console.print(table)
