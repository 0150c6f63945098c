"""
CSV / SVG / JSON 출력

CSV 는 `.` 소수점, 유효숫자 17 자리, LF 줄바꿈으로 씁니다.
"""
import csv
import io
from pathlib import Path

from ..errors import ReportIOError
from ..logging import get_logger
from ..catalog import DistSpec
from ..oracle import McEstimate
from ..sweep import SweepTable
from .records import VerificationReport

logger = get_logger("sigband.report.writers")

CSV_HEADER = ("param", "coverage", "excess")
MC_CSV_HEADER = (
    "family", "params", "n_samples", "seed", "hits", "estimate", "stderr", "lower_99", "upper_99",
)

SVG_WIDTH = 640
SVG_HEIGHT = 400
SVG_MARGIN = 48


def format_float(value: float) -> str:
    return f"{value:.17g}"


def table_to_csv(table: SweepTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in table.rows:
        writer.writerow((format_float(row.param), format_float(row.coverage), format_float(row.excess)))
    return buffer.getvalue()


def _write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    try:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise ReportIOError(f"cannot write {path}: {e}") from e
    logger.debug(f"파일 저장: {path} ({len(text)} bytes)")
    return path


def write_csv(table: SweepTable, path: str | Path) -> Path:
    """헤더 `param,coverage,excess` 의 CSV 를 씁니다."""
    return _write_text(path, table_to_csv(table))


def _format_param(value) -> str:
    return format_float(value) if isinstance(value, float) else str(value)


def estimate_to_csv(dist: DistSpec, est: McEstimate) -> str:
    """몬테카를로 추정 한 건의 CSV. params 는 `key=value` 를 `;` 로 잇습니다."""
    params = ";".join(f"{key}={_format_param(value)}" for key, value in dist.params().items())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(MC_CSV_HEADER)
    writer.writerow((
        dist.family, params, est.n_samples, est.seed, est.hits,
        format_float(est.estimate), format_float(est.stderr),
        format_float(est.lower_99), format_float(est.upper_99),
    ))
    return buffer.getvalue()


def write_estimate_csv(dist: DistSpec, est: McEstimate, path: str | Path) -> Path:
    return _write_text(path, estimate_to_csv(dist, est))


def table_to_svg(table: SweepTable) -> str:
    """excess 대 param 의 꺾은선과 0 기준선만 있는 SVG"""
    xs = table.params()
    ys = [row.excess for row in table.rows]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(min(ys), 0.0), max(max(ys), 0.0)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    plot_w = SVG_WIDTH - 2 * SVG_MARGIN
    plot_h = SVG_HEIGHT - 2 * SVG_MARGIN

    def sx(x: float) -> float:
        return SVG_MARGIN + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return SVG_HEIGHT - SVG_MARGIN - (y - y_lo) / (y_hi - y_lo) * plot_h

    points = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in zip(xs, ys))
    left, right = SVG_MARGIN, SVG_WIDTH - SVG_MARGIN
    top, bottom = SVG_MARGIN, SVG_HEIGHT - SVG_MARGIN
    zero = sy(0.0)
    title = table.title or f"{table.family} {table.param}"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{zero:.3f}" x2="{right}" y2="{zero:.3f}" stroke="gray" stroke-dasharray="4 4"/>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>',
        f'<text x="{left}" y="{bottom + 16}" font-size="11">{x_lo:.6g}</text>',
        f'<text x="{right}" y="{bottom + 16}" font-size="11" text-anchor="end">{x_hi:.6g}</text>',
        f'<text x="{left - 4}" y="{top}" font-size="11" text-anchor="end">{y_hi:.3g}</text>',
        f'<text x="{left - 4}" y="{bottom}" font-size="11" text-anchor="end">{y_lo:.3g}</text>',
        f'<text x="{SVG_WIDTH / 2:.1f}" y="{top - 16}" font-size="13" text-anchor="middle">'
        f'{_escape(title)} (excess over {table.threshold:.7g})</text>',
        f'<text x="{SVG_WIDTH / 2:.1f}" y="{SVG_HEIGHT - 8}" font-size="11" text-anchor="middle">'
        f'{_escape(table.param)}</text>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def write_svg(table: SweepTable, path: str | Path) -> Path:
    return _write_text(path, table_to_svg(table))


def write_report(report: VerificationReport, path: str | Path) -> Path:
    """보고서를 JSON 으로 씁니다. 같은 보고서는 같은 바이트열이 됩니다."""
    return _write_text(path, report.model_dump_json(indent=2, by_alias=True) + "\n")


def load_report(path: str | Path) -> VerificationReport:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ReportIOError(f"cannot read {path}: {e}") from e
    return VerificationReport.model_validate_json(text)
