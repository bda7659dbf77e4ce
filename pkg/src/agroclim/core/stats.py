"""Summary statistics over a derived series, feeding the text summaries."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import EmptySeries
from .season import DerivedSeries

# |slope| * length below this fraction of the value range reads as steady
STEADY_RANGE_FRACTION = 0.05


class Trend(enum.Enum):
    RISING = "rising"
    FALLING = "falling"
    STEADY = "steady"


@dataclass(frozen=True)
class SummaryStats:
    min_value: float
    min_index: int
    max_value: float
    max_index: int
    mean: float
    last_value: float
    trend: Trend
    slope: float
    valid_count: int


def summary_stats(series: DerivedSeries) -> SummaryStats:
    """Extremes (earliest index wins ties), mean, last value and OLS trend."""
    points = [(i, v) for i, v in enumerate(series.values) if v is not None]
    if not points:
        raise EmptySeries(f"series {series.attribute} has no values")

    min_index, min_value = min(points, key=lambda p: (p[1], p[0]))
    max_index, max_value = max(points, key=lambda p: (p[1], -p[0]))
    # fsum plus clamping keeps the mean inside [min, max] even when float
    # rounding would push the naive sum a few ulp outside it
    mean = min(max_value, max(min_value, math.fsum(v for _, v in points) / len(points)))
    last_value = points[-1][1]

    if len(points) == 1:
        slope = 0.0
    else:
        xs = [i for i, _ in points]
        x_mean = sum(xs) / len(xs)
        sxx = sum((x - x_mean) ** 2 for x in xs)
        sxy = sum((x - x_mean) * (v - mean) for x, v in points)
        slope = sxy / sxx

    value_range = max_value - min_value
    if value_range == 0.0 or abs(slope) * len(series.values) < STEADY_RANGE_FRACTION * value_range:
        trend = Trend.STEADY
    elif slope > 0:
        trend = Trend.RISING
    else:
        trend = Trend.FALLING

    return SummaryStats(
        min_value=min_value,
        min_index=min_index,
        max_value=max_value,
        max_index=max_index,
        mean=mean,
        last_value=last_value,
        trend=trend,
        slope=slope,
        valid_count=len(points),
    )
