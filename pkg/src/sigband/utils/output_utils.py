"""
출력 관련 유틸리티 함수들
"""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any

from rich.console import Console
from rich.text import Text

# stdout: 결과, stderr: 오류와 진행 표시
console = Console()
err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    """출력 형식 정의"""
    text = "text"
    json = "json"


@dataclass
class CommonOptions:
    """공통 옵션 데이터 클래스"""
    verbose: bool = False
    quiet: bool = False
    output_format: OutputFormat = OutputFormat.text
    config_file: str = None


def emit(message: str, options: CommonOptions = None):
    """데이터 줄을 markup 해석이나 줄바꿈 없이 그대로 출력"""
    if options and options.quiet:
        return
    console.print(message, markup=False, highlight=False, soft_wrap=True)


def emit_json(data: Any):
    """JSON 문서 출력 (quiet 와 무관)"""
    console.print(json.dumps(data, ensure_ascii=False, indent=2), markup=False, highlight=False, soft_wrap=True)


def output_result(message: str, style: str = "", options: CommonOptions = None):
    """
    공통 출력 함수

    Args:
        message: 출력할 메시지
        style: 텍스트 스타일
        options: 공통 옵션
    """
    if options and options.quiet:
        return

    if options and options.output_format == OutputFormat.json:
        emit_json({"message": message, "status": "success"})
    elif style:
        console.print(Text(message, style=style), soft_wrap=True)
    else:
        emit(message)

    if options and options.verbose:
        err_console.print(f"[dim]설정 파일: {options.config_file or 'None'}[/dim]")


def print_error(message: str):
    """오류 메시지를 stderr 로 출력"""
    err_console.print(Text(f"error: {message}", style="red"), soft_wrap=True)
