"""Season windows and per-day derived series.

All analysis is anchored to a user-chosen day-zero: index n of a season
holds the record for day_zero + n days. Reference seasons from earlier
years are aligned by the same day offsets.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field

from ..catalog import FROST_THRESHOLD_C, attribute
from ..datasource.types import DailyRecord, GeoPoint
from .errors import DomainError, InsufficientData
from .gdd import DEFAULT_METHOD, GddMethod, daily_gdd
from .vpd import vpd

# share of missing days above which a series is flagged low-confidence
LOW_CONFIDENCE_GAP_FRACTION = 0.10


@dataclass(frozen=True)
class SeasonSpec:
    day_zero: dt.date
    length_days: int
    t_base: float = 10.0

    def __post_init__(self):
        if not 1 <= self.length_days <= 366:
            raise DomainError(f"length_days must be in [1, 366], got {self.length_days}")
        if not math.isfinite(self.t_base):
            raise DomainError(f"t_base must be finite, got {self.t_base!r}")

    def dates(self) -> list[dt.date]:
        return [self.day_zero + dt.timedelta(days=n) for n in range(self.length_days)]


@dataclass(frozen=True)
class SeasonSeries:
    spec: SeasonSpec
    point: GeoPoint
    records: tuple[DailyRecord, ...]

    def __post_init__(self):
        if len(self.records) != self.spec.length_days:
            raise DomainError(
                f"season needs {self.spec.length_days} records, got {len(self.records)}"
            )
        for n, rec in enumerate(self.records):
            expected = self.spec.day_zero + dt.timedelta(days=n)
            if rec.date != expected:
                raise DomainError(f"record {n} dated {rec.date}, expected {expected}")


@dataclass(frozen=True)
class DerivedSeries:
    attribute: str
    unit: str
    values: tuple  # float or None per day index
    gap_days: int = 0

    def __post_init__(self):
        for v in self.values:
            if v is not None and not math.isfinite(v):
                raise DomainError(f"non-finite value {v!r} in {self.attribute} series")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def low_confidence(self) -> bool:
        return len(self.values) > 0 and self.gap_days > LOW_CONFIDENCE_GAP_FRACTION * len(self.values)


def shift_years(day: dt.date, years_back: int) -> dt.date:
    """The same calendar date years_back earlier; Feb 29 falls back to Feb 28."""
    try:
        return day.replace(year=day.year - years_back)
    except ValueError:
        return day.replace(year=day.year - years_back, day=28)


def slice_season(records, spec: SeasonSpec, point: GeoPoint) -> SeasonSeries:
    """Extract the exact [day_zero, day_zero + length) window from records."""
    by_date = {r.date: r for r in records}
    wanted = spec.dates()
    missing = [d for d in wanted if d not in by_date]
    if missing:
        raise InsufficientData(missing)
    return SeasonSeries(spec=spec, point=point, records=tuple(by_date[d] for d in wanted))


def _pointwise(season: SeasonSeries, fn):
    """Apply fn(record) per day; fn returns None when inputs are missing."""
    return tuple(fn(r) for r in season.records)


def cumulative_gdd(season: SeasonSeries, method: GddMethod = DEFAULT_METHOD) -> DerivedSeries:
    """Running GDD total; days with missing temperatures contribute zero."""
    t_base = season.spec.t_base
    total = 0.0
    values = []
    gaps = 0
    for rec in season.records:
        if rec.t_max is None or rec.t_min is None:
            gaps += 1
        else:
            total += daily_gdd(rec.t_max, rec.t_min, t_base, method)
        values.append(total)
    return DerivedSeries("GDD_CUMULATIVE", "°C·day", tuple(values), gap_days=gaps)


def _cumulative(season: SeasonSeries, attr_id: str, unit: str, increment) -> DerivedSeries:
    total = 0.0
    values = []
    gaps = 0
    for rec in season.records:
        inc = increment(rec)
        if inc is None:
            gaps += 1
        else:
            total += inc
        values.append(total)
    return DerivedSeries(attr_id, unit, tuple(values), gap_days=gaps)


def derive_attribute(season: SeasonSeries, attr_id: str, method: GddMethod = DEFAULT_METHOD) -> DerivedSeries:
    """Evaluate one catalog attribute over the season."""
    attr = attribute(attr_id)

    if attr.source_field is not None:
        values = _pointwise(season, lambda r: r.value(attr.source_field))
        return DerivedSeries(attr.id, attr.unit, values, gap_days=sum(v is None for v in values))

    if attr_id == "T_MEAN":
        values = _pointwise(
            season,
            lambda r: None if r.t_max is None or r.t_min is None else (r.t_max + r.t_min) / 2.0,
        )
    elif attr_id == "DIURNAL_RANGE":
        values = _pointwise(
            season,
            lambda r: None if r.t_max is None or r.t_min is None else r.t_max - r.t_min,
        )
    elif attr_id == "GDD_DAILY":
        t_base = season.spec.t_base
        values = _pointwise(
            season,
            lambda r: None
            if r.t_max is None or r.t_min is None
            else daily_gdd(r.t_max, r.t_min, t_base, method),
        )
    elif attr_id == "GDD_CUMULATIVE":
        return cumulative_gdd(season, method)
    elif attr_id == "RAIN_CUMULATIVE":
        return _cumulative(season, attr_id, attr.unit, lambda r: r.rain)
    elif attr_id == "FROST_DAYS_CUMULATIVE":
        return _cumulative(
            season, attr_id, attr.unit,
            lambda r: None if r.t_min is None else float(r.t_min < FROST_THRESHOLD_C),
        )
    elif attr_id == "VPD":
        def _vpd(r: DailyRecord):
            if None in (r.t_max, r.t_min, r.rh_at_tmax, r.rh_at_tmin):
                return None
            return vpd(r.t_max, r.t_min, r.rh_at_tmax, r.rh_at_tmin)

        values = _pointwise(season, _vpd)
    else:  # pragma: no cover - catalog and dispatch kept in sync
        raise AssertionError(f"no derivation for {attr_id}")

    return DerivedSeries(attr.id, attr.unit, values, gap_days=sum(v is None for v in values))
