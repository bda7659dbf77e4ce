"""Multi-page PDF composition: a 2x3 chart grid with text beneath each chart.

Pages are A4 portrait with 15 mm margins. Charts fill column-major (first
column top to bottom, then the second). Output is deterministic for a
fixed generation timestamp: the canvas runs in invariant mode, so the same
inputs produce byte-identical files.
"""

from __future__ import annotations

import datetime as dt
import io
import math
from dataclasses import dataclass, field

from reportlab.lib.colors import HexColor
from reportlab.lib.pagesizes import A4
from reportlab.lib.utils import simpleSplit
from reportlab.pdfgen import canvas as pdfcanvas

from ..core.compare import ReferenceKind
from ..core.season import SeasonSpec
from ..datasource.types import GeoPoint
from .charts import ChartDrawing, Line, Polyline, Text
from .nlg import NlgSummary

PAGE_W, PAGE_H = A4
MARGIN = 15 / 25.4 * 72  # 15 mm in points
CHARTS_PER_PAGE = 6
COLS, ROWS = 2, 3
HEADER_H = 40.0
TEXT_H = 78.0  # reserved strip beneath each chart for its summary

CELL_W = (PAGE_W - 2 * MARGIN) / COLS
CELL_H = (PAGE_H - 2 * MARGIN - HEADER_H) / ROWS
CHART_MAX_W = CELL_W - 8
CHART_MAX_H = CELL_H - TEXT_H


class LayoutError(ValueError):
    """A chart does not fit its grid cell."""


@dataclass(frozen=True)
class ReportSpec:
    point: GeoPoint
    season: SeasonSpec
    attributes: tuple[str, ...]
    comparison: bool = False
    reference_kind: ReferenceKind = field(default_factory=lambda: ReferenceKind.mean_of_last(5))
    generated_at: dt.datetime = field(default_factory=lambda: dt.datetime.now(dt.timezone.utc))

    def __post_init__(self):
        if not self.attributes:
            raise ValueError("attribute list must be non-empty")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("attribute list has duplicates")


def page_count(n_charts: int) -> int:
    return math.ceil(n_charts / CHARTS_PER_PAGE)


def _replay(c: pdfcanvas.Canvas, drawing: ChartDrawing, ox: float, oy: float) -> None:
    c.saveState()
    c.translate(ox, oy)
    for cmd in drawing.commands:
        if isinstance(cmd, Line):
            c.setStrokeColor(HexColor(cmd.color))
            c.setLineWidth(cmd.width)
            c.setDash([])
            c.line(cmd.x1, cmd.y1, cmd.x2, cmd.y2)
        elif isinstance(cmd, Polyline):
            if len(cmd.points) < 2:
                continue
            c.setStrokeColor(HexColor(cmd.color))
            c.setLineWidth(cmd.width)
            c.setDash(list(cmd.dash))
            p = c.beginPath()
            p.moveTo(*cmd.points[0])
            for x, y in cmd.points[1:]:
                p.lineTo(x, y)
            c.drawPath(p, stroke=1, fill=0)
        elif isinstance(cmd, Text):
            c.setFillColor(HexColor(cmd.color))
            c.setFont("Helvetica", cmd.size)
            if cmd.anchor == "middle":
                c.drawCentredString(cmd.x, cmd.y, cmd.text)
            elif cmd.anchor == "end":
                c.drawRightString(cmd.x, cmd.y, cmd.text)
            else:
                c.drawString(cmd.x, cmd.y, cmd.text)
    c.restoreState()


def _draw_summary(c: pdfcanvas.Canvas, summary: NlgSummary, x: float, y_top: float, width: float) -> None:
    c.setFillColor(HexColor("#202020"))
    c.setFont("Helvetica", 6.5)
    y = y_top
    for sentence in summary.sentences:
        for line in simpleSplit(sentence, "Helvetica", 6.5, width):
            c.drawString(x, y, line)
            y -= 8
            if y < 0:
                return


def compose_pdf(
    spec: ReportSpec,
    charts: list[ChartDrawing],
    summaries: list[NlgSummary],
    attribution: str = "Weather data: SILO gridded daily data, Queensland Government (CC BY 4.0).",
) -> bytes:
    """Render the full report; page count is ceil(n_charts / 6)."""
    if not len(charts) == len(summaries) == len(spec.attributes):
        raise ValueError("charts and summaries must parallel the attribute list")
    for i, ch in enumerate(charts):
        if ch.width > CHART_MAX_W or ch.height > CHART_MAX_H:
            raise LayoutError(
                f"chart {i} is {ch.width}x{ch.height}, cell allows {CHART_MAX_W:.0f}x{CHART_MAX_H:.0f}"
            )

    buf = io.BytesIO()
    c = pdfcanvas.Canvas(buf, pagesize=A4, invariant=1, pageCompression=0)
    c.setTitle("Seasonal weather report")

    n_pages = page_count(len(charts))
    for page in range(n_pages):
        # header
        c.setFillColor(HexColor("#000000"))
        c.setFont("Helvetica-Bold", 11)
        c.drawString(MARGIN, PAGE_H - MARGIN - 10, "Seasonal weather report")
        c.setFont("Helvetica", 7.5)
        c.drawString(
            MARGIN,
            PAGE_H - MARGIN - 22,
            f"Location {spec.point.latitude:.4f}, {spec.point.longitude:.4f}  ·  "
            f"day zero {spec.season.day_zero.isoformat()}  ·  {spec.season.length_days} days  ·  "
            f"generated {spec.generated_at.strftime('%Y-%m-%d %H:%M UTC')}",
        )
        c.setFont("Helvetica", 6.5)
        c.drawString(MARGIN, PAGE_H - MARGIN - 32, attribution)
        c.setFont("Helvetica", 7)
        c.drawRightString(PAGE_W - MARGIN, PAGE_H - MARGIN - 10, f"page {page + 1} of {n_pages}")

        grid_top = PAGE_H - MARGIN - HEADER_H
        start = page * CHARTS_PER_PAGE
        for slot, idx in enumerate(range(start, min(start + CHARTS_PER_PAGE, len(charts)))):
            col, row = divmod(slot, ROWS)  # column-major fill
            cell_x = MARGIN + col * CELL_W
            cell_top = grid_top - row * CELL_H
            chart = charts[idx]
            _replay(c, chart, cell_x + (CELL_W - chart.width) / 2, cell_top - chart.height)
            _draw_summary(
                c,
                summaries[idx],
                cell_x + 4,
                cell_top - chart.height - 12,
                CELL_W - 12,
            )
        c.showPage()

    c.save()
    return buf.getvalue()
