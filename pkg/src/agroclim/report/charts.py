"""Resolution-independent line-chart drawings.

A chart is a flat list of drawing commands (polylines, lines, text, rects)
in a local coordinate system with the origin at the bottom-left of the
chart cell. The PDF composer replays these commands onto its canvas; tests
can check geometry without rendering anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core.compare import ComparisonResult
from ..core.errors import EmptySeries
from ..core.season import DerivedSeries

CURRENT_COLOR = "#1f6fb2"
REFERENCE_COLOR = "#c0392b"
DIFFERENCE_COLOR = "#2e7d32"
AXIS_COLOR = "#404040"
GRID_COLOR = "#d0d0d0"


@dataclass(frozen=True)
class Line:
    x1: float
    y1: float
    x2: float
    y2: float
    color: str = AXIS_COLOR
    width: float = 0.7


@dataclass(frozen=True)
class Polyline:
    points: tuple  # ((x, y), ...)
    color: str
    width: float = 1.1
    dash: tuple = ()
    label: str = ""


@dataclass(frozen=True)
class Text:
    x: float
    y: float
    text: str
    size: float = 6.0
    color: str = AXIS_COLOR
    anchor: str = "start"  # start | middle | end


@dataclass(frozen=True)
class ChartDrawing:
    width: float
    height: float
    commands: tuple = field(default_factory=tuple)

    def traces(self) -> list[Polyline]:
        return [c for c in self.commands if isinstance(c, Polyline) and c.label]


@dataclass(frozen=True)
class ChartStyle:
    width: float = 240.0
    height: float = 145.0
    difference_mode: bool = False
    title: str = ""
    unit: str = ""


# inner plot margins, in chart-local points
_M_LEFT, _M_RIGHT, _M_TOP, _M_BOTTOM = 34.0, 6.0, 16.0, 16.0


def _segments(values):
    """Split a value list into runs of consecutive non-missing points."""
    runs, run = [], []
    for i, v in enumerate(values):
        if v is None:
            if run:
                runs.append(run)
            run = []
        else:
            run.append((i, v))
    if run:
        runs.append(run)
    return runs


def _ticks(lo: float, hi: float, count: int = 4) -> list[float]:
    if hi == lo:
        return [lo]
    step = (hi - lo) / count
    return [lo + step * i for i in range(count + 1)]


def render_chart(data: DerivedSeries | ComparisonResult, style: ChartStyle = ChartStyle()) -> ChartDrawing:
    """Draw axes plus one or two traces sized to a single grid cell."""
    if isinstance(data, ComparisonResult):
        if style.difference_mode:
            traces = [(data.difference, "difference", DIFFERENCE_COLOR, ())]
        else:
            traces = [
                (data.current, "current", CURRENT_COLOR, ()),
                (data.reference, "reference", REFERENCE_COLOR, (3.0, 2.0)),
            ]
        unit = style.unit or data.current.unit
        title = style.title or data.current.attribute
        n = len(data.current)
    else:
        traces = [(data, "current", CURRENT_COLOR, ())]
        unit = style.unit or data.unit
        title = style.title or data.attribute
        n = len(data)

    all_values = [v for series, *_ in traces for v in series.values if v is not None]
    if n == 0 or not all_values:
        raise EmptySeries("chart input has no values")

    lo, hi = min(all_values), max(all_values)
    if hi == lo:
        lo, hi = lo - 1.0, hi + 1.0

    w, h = style.width, style.height
    px0, px1 = _M_LEFT, w - _M_RIGHT
    py0, py1 = _M_BOTTOM, h - _M_TOP

    def sx(i: float) -> float:
        return px0 if n <= 1 else px0 + (px1 - px0) * i / (n - 1)

    def sy(v: float) -> float:
        return py0 + (py1 - py0) * (v - lo) / (hi - lo)

    cmds: list = []
    # frame
    cmds.append(Line(px0, py0, px1, py0))
    cmds.append(Line(px0, py0, px0, py1))
    # y ticks with grid lines
    for tv in _ticks(lo, hi):
        y = sy(tv)
        cmds.append(Line(px0, y, px1, y, color=GRID_COLOR, width=0.3))
        cmds.append(Text(px0 - 2, y - 2, f"{tv:g}"[:7], anchor="end"))
    # x ticks: day indices
    for xi in sorted({0, (n - 1) // 2, n - 1}):
        cmds.append(Line(sx(xi), py0, sx(xi), py0 - 2))
        cmds.append(Text(sx(xi), py0 - 9, str(xi), anchor="middle"))
    # title and y-axis unit
    cmds.append(Text(w / 2, h - 9, f"{title} ({unit})" if unit else title, size=7.0, anchor="middle"))

    # legend, top-left inside the plot
    lx = px0 + 4
    for series, label, color, dash in traces:
        for run in _segments(series.values):
            cmds.append(
                Polyline(
                    points=tuple((sx(i), sy(v)) for i, v in run),
                    color=color,
                    dash=dash,
                    label=label,
                )
            )
        ly = py1 - 5 - 8 * len([c for c in cmds if isinstance(c, Text) and c.size == 5.5])
        cmds.append(Line(lx, ly + 2, lx + 10, ly + 2, color=color, width=1.1))
        cmds.append(Text(lx + 13, ly, label, size=5.5, color=color))

    return ChartDrawing(width=w, height=h, commands=tuple(cmds))
