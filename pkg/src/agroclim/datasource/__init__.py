from .cache import RecordCache, key_filename
from .client import WeatherDataSource, fixture_filename
from .csvio import parse_daily_csv, read_cache_csv, write_cache_csv
from .types import (
    AUSTRALIA,
    BoundingBox,
    CacheIOError,
    CacheKey,
    DailyRecord,
    DataSourceError,
    DateRange,
    GeoPoint,
    NetworkError,
    OutOfCoverage,
    ParseError,
)
from .validate import Violation, validate_records

__all__ = [
    "RecordCache",
    "key_filename",
    "WeatherDataSource",
    "fixture_filename",
    "parse_daily_csv",
    "read_cache_csv",
    "write_cache_csv",
    "AUSTRALIA",
    "BoundingBox",
    "CacheIOError",
    "CacheKey",
    "DailyRecord",
    "DataSourceError",
    "DateRange",
    "GeoPoint",
    "NetworkError",
    "OutOfCoverage",
    "ParseError",
    "Violation",
    "validate_records",
]
