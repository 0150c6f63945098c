"""
유틸리티 패키지
"""

from .output_utils import (
    CommonOptions,
    OutputFormat,
    console,
    emit,
    emit_json,
    err_console,
    output_result,
    print_error,
)

__all__ = [
    "OutputFormat",
    "CommonOptions",
    "output_result",
    "emit",
    "emit_json",
    "print_error",
    "console",
    "err_console",
]
