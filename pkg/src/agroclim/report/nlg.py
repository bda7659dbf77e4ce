"""Template-based plain-language chart summaries.

Sentence wording lives in plain-text resource files next to this module so
it can be edited without touching code. Placeholders: {attribute}, {lat},
{lon}, {day_zero}, {span}, {unit}, {min}, {min_date}, {max}, {max_date},
{mean}, {trend}, {days_above}, {days_below}, {longest_run}.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from ..catalog import Attribute
from ..core.compare import ComparisonResult
from ..core.season import SeasonSpec
from ..core.stats import SummaryStats
from ..datasource.types import GeoPoint

_TEMPLATE_DIR = Path(__file__).parent / "templates"


def fmt1(x: float) -> str:
    """One decimal place, half away from zero, locale-independent."""
    return str(Decimal(repr(x)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class NlgSummary:
    attribute: str
    sentences: tuple[str, ...]
    low_confidence: bool


def _template(name: str, template_dir: Path | None = None) -> str:
    return ((template_dir or _TEMPLATE_DIR) / f"{name}.txt").read_text().strip()


def longest_signed_run(values) -> int:
    """Longest consecutive run of same-sign non-zero values."""
    best = run = 0
    prev_sign = 0
    for v in values:
        sign = 0 if v is None or v == 0 else (1 if v > 0 else -1)
        if sign != 0 and sign == prev_sign:
            run += 1
        else:
            run = 1 if sign != 0 else 0
        prev_sign = sign
        best = max(best, run)
    return best


def generate_summary(
    attribute: Attribute,
    stats: SummaryStats,
    comparison: ComparisonResult | None,
    season: SeasonSpec,
    point: GeoPoint,
    low_confidence: bool = False,
    template_dir: Path | None = None,
) -> NlgSummary:
    """Deterministic sentence list describing one chart."""
    def date_of(index: int) -> str:
        return (season.day_zero + dt.timedelta(days=index)).isoformat()

    fields = {
        "attribute": attribute.name,
        "unit": attribute.unit,
        "lat": f"{point.latitude:.2f}",
        "lon": f"{point.longitude:.2f}",
        "day_zero": season.day_zero.isoformat(),
        "span": str(season.length_days),
        "min": fmt1(stats.min_value),
        "min_date": date_of(stats.min_index),
        "max": fmt1(stats.max_value),
        "max_date": date_of(stats.max_index),
        "mean": fmt1(stats.mean),
        "trend": stats.trend.value,
    }

    sentences = [
        _template("scope", template_dir).format(**fields),
        _template("extremes", template_dir).format(**fields),
        _template("trend", template_dir).format(**fields),
    ]

    if comparison is not None:
        diff = comparison.difference.values
        fields["days_above"] = str(sum(1 for v in diff if v is not None and v > 0))
        fields["days_below"] = str(sum(1 for v in diff if v is not None and v < 0))
        fields["longest_run"] = str(longest_signed_run(diff))
        sentences.append(_template("comparison", template_dir).format(**fields))

    if low_confidence:
        sentences.append(_template("low_confidence", template_dir).format(**fields))

    return NlgSummary(attribute=attribute.id, sentences=tuple(sentences), low_confidence=low_confidence)
