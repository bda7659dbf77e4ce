"""Domain types and errors for the gridded daily-weather data source."""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal


class DataSourceError(Exception):
    """Base for datasource failures; carries the offending request."""

    def __init__(self, message: str, *, request: dict | None = None):
        super().__init__(message)
        self.request = request or {}


class NetworkError(DataSourceError):
    pass


class ParseError(DataSourceError):
    def __init__(self, message: str, *, line: int | None = None, column: str | None = None, request: dict | None = None):
        super().__init__(message, request=request)
        self.line = line
        self.column = column


class OutOfCoverage(DataSourceError):
    pass


class CacheIOError(DataSourceError):
    pass


@dataclass(frozen=True)
class BoundingBox:
    lat_min: float = -44.0
    lat_max: float = -10.0
    lon_min: float = 112.0
    lon_max: float = 154.0

    def contains(self, lat: float, lon: float) -> bool:
        return self.lat_min <= lat <= self.lat_max and self.lon_min <= lon <= self.lon_max


AUSTRALIA = BoundingBox()


@dataclass(frozen=True)
class GeoPoint:
    latitude: float
    longitude: float

    def __post_init__(self):
        if not (math.isfinite(self.latitude) and math.isfinite(self.longitude)):
            raise ValueError(f"coordinates must be finite: {self.latitude}, {self.longitude}")


@dataclass(frozen=True)
class DateRange:
    start: dt.date
    end: dt.date

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"start {self.start} after end {self.end}")

    def days(self) -> list[dt.date]:
        n = (self.end - self.start).days + 1
        return [self.start + dt.timedelta(days=i) for i in range(n)]


# value fields carried by a daily record, in canonical order
VALUE_FIELDS = (
    "t_max",
    "t_min",
    "rain",
    "evaporation",
    "radiation",
    "rh_at_tmax",
    "rh_at_tmin",
    "vapour_pressure",
    "mslp",
    "et_short_crop",
    "et_tall_crop",
)

QUALITY_MISSING = "missing"


@dataclass(frozen=True)
class DailyRecord:
    """One day of observed weather at a grid point.

    Any value field may be None (missing); the quality mapping carries the
    source's per-field quality code, kept as opaque text.
    """

    date: dt.date
    t_max: float | None = None
    t_min: float | None = None
    rain: float | None = None
    evaporation: float | None = None
    radiation: float | None = None
    rh_at_tmax: float | None = None
    rh_at_tmin: float | None = None
    vapour_pressure: float | None = None
    mslp: float | None = None
    et_short_crop: float | None = None
    et_tall_crop: float | None = None
    quality: dict = field(default_factory=dict)

    def value(self, field_name: str) -> float | None:
        return getattr(self, field_name)


def _round2(x: float) -> float:
    return float(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class CacheKey:
    """Deterministic identity of one upstream request.

    Coordinates are rounded to 2 decimal places (about 1.1 km) with
    half-away-from-zero rounding so logically identical requests share a key.
    """

    lat: float
    lon: float
    start: dt.date
    end: dt.date
    source: str

    @classmethod
    def for_request(cls, point: GeoPoint, range_: DateRange, source: str) -> "CacheKey":
        return cls(_round2(point.latitude), _round2(point.longitude), range_.start, range_.end, source)

    def canonical(self) -> str:
        return f"{self.source}|{self.lat:.2f},{self.lon:.2f}|{self.start.isoformat()}..{self.end.isoformat()}"
