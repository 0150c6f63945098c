"""
검증 보고서와 CSV / SVG / JSON 출력
"""

from .records import PropertyCheck, ReportSummary, VerificationRecord, VerificationReport
from .suite import VerificationSuite
from .writers import (
    CSV_HEADER,
    MC_CSV_HEADER,
    estimate_to_csv,
    load_report,
    table_to_csv,
    table_to_svg,
    write_csv,
    write_estimate_csv,
    write_report,
    write_svg,
)

__all__ = [
    "VerificationRecord",
    "VerificationReport",
    "PropertyCheck",
    "ReportSummary",
    "VerificationSuite",
    "CSV_HEADER",
    "MC_CSV_HEADER",
    "estimate_to_csv",
    "write_estimate_csv",
    "table_to_csv",
    "table_to_svg",
    "write_csv",
    "write_svg",
    "write_report",
    "load_report",
]
