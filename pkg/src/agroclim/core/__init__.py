from .compare import ComparisonResult, ReferenceKind, difference_series, reference_series
from .errors import DomainError, EmptySeries, InsufficientData, MismatchedSeries, UnknownAttribute
from .gdd import DEFAULT_METHOD, GddMethod, daily_gdd
from .season import (
    DerivedSeries,
    SeasonSeries,
    SeasonSpec,
    cumulative_gdd,
    derive_attribute,
    shift_years,
    slice_season,
)
from .stats import SummaryStats, Trend, summary_stats
from .vpd import saturation_vp, vpd

__all__ = [
    "ComparisonResult",
    "ReferenceKind",
    "difference_series",
    "reference_series",
    "DomainError",
    "EmptySeries",
    "InsufficientData",
    "MismatchedSeries",
    "UnknownAttribute",
    "DEFAULT_METHOD",
    "GddMethod",
    "daily_gdd",
    "DerivedSeries",
    "SeasonSeries",
    "SeasonSpec",
    "cumulative_gdd",
    "derive_attribute",
    "shift_years",
    "slice_season",
    "SummaryStats",
    "Trend",
    "summary_stats",
    "saturation_vp",
    "vpd",
]
