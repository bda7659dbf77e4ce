"""Client for a SILO-style gridded daily-weather HTTP API.

Two transports: live HTTP (GET with lat/lon/start/finish query params,
CSV body) and a fixture directory for offline operation, where each
request resolves to a file named by a stable hash of the canonical
request. Results are validated and cached before being returned.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import logging
from pathlib import Path

import requests

from .cache import DEFAULT_TTL_SECONDS, RecordCache
from .csvio import parse_daily_csv
from .types import (
    AUSTRALIA,
    BoundingBox,
    CacheKey,
    DailyRecord,
    DateRange,
    GeoPoint,
    NetworkError,
    OutOfCoverage,
    ParseError,
)
from .validate import validate_records

log = logging.getLogger(__name__)


def fixture_filename(point: GeoPoint, range_: DateRange) -> str:
    key = CacheKey.for_request(point, range_, "fixture")
    canonical = f"{key.lat:.2f},{key.lon:.2f}|{key.start.isoformat()}..{key.end.isoformat()}"
    return hashlib.sha256(canonical.encode()).hexdigest()[:16] + ".csv"


class WeatherDataSource:
    """Fetches, parses, validates and caches daily records for a grid point."""

    def __init__(
        self,
        *,
        base_url: str | None = None,
        fixture_dir: str | Path | None = None,
        ident_param: str | None = None,
        cache_dir: str | Path,
        ttl_seconds: int = DEFAULT_TTL_SECONDS,
        bounding_box: BoundingBox = AUSTRALIA,
        clock=None,
        timeout: float = 30.0,
    ):
        if (base_url is None) == (fixture_dir is None):
            raise ValueError("configure exactly one of base_url / fixture_dir")
        self.base_url = base_url
        self.fixture_dir = Path(fixture_dir) if fixture_dir else None
        self.ident_param = ident_param
        self.bounding_box = bounding_box
        self.timeout = timeout
        self.cache = RecordCache(cache_dir, ttl_seconds, clock=clock)
        self._clock = clock or (lambda: dt.datetime.now(dt.timezone.utc))
        self.upstream_reads = 0  # fixture/HTTP fetch count, for tests and stats

    @property
    def source_id(self) -> str:
        return self.base_url or f"fixture:{self.fixture_dir}"

    def _request_params(self, point: GeoPoint, range_: DateRange) -> dict:
        return {
            "latitude": point.latitude,
            "longitude": point.longitude,
            "start": range_.start.isoformat(),
            "finish": range_.end.isoformat(),
        }

    def check_coverage(self, point: GeoPoint, range_: DateRange) -> None:
        params = self._request_params(point, range_)
        if not self.bounding_box.contains(point.latitude, point.longitude):
            raise OutOfCoverage(
                f"({point.latitude}, {point.longitude}) outside the data source bounding box",
                request=params,
            )
        last = self.cache.last_publishable_day()
        if range_.end > last:
            raise OutOfCoverage(
                f"range ends {range_.end}, after the last published day {last}",
                request=params,
            )

    def _fetch_upstream(self, point: GeoPoint, range_: DateRange) -> list[DailyRecord]:
        self.upstream_reads += 1
        params = self._request_params(point, range_)
        if self.fixture_dir is not None:
            path = self.fixture_dir / fixture_filename(point, range_)
            if not path.exists():
                raise OutOfCoverage(f"no fixture recorded for this request ({path.name})", request=params)
            text = path.read_text()
        else:
            query = {
                "lat": point.latitude,
                "lon": point.longitude,
                "start": range_.start.strftime("%Y%m%d"),
                "finish": range_.end.strftime("%Y%m%d"),
                "format": "csv",
            }
            if self.ident_param:
                query["username"] = self.ident_param
            try:
                resp = requests.get(self.base_url, params=query, timeout=self.timeout)
            except requests.RequestException as exc:
                raise NetworkError(f"upstream unreachable: {exc}", request=params) from exc
            if resp.status_code != 200:
                raise NetworkError(f"upstream returned HTTP {resp.status_code}", request=params)
            text = resp.text

        records = parse_daily_csv(text)
        expected = range_.days()
        got = [r.date for r in records]
        if got != expected:
            raise ParseError(
                f"upstream returned {len(got)} rows, expected one per day "
                f"{range_.start}..{range_.end}",
                request=params,
            )
        records, violations = validate_records(records)
        for v in violations:
            log.warning("record invariant violation at %s %s: %s", v.date, v.field, v.message)
        return records

    def fetch_daily_series(self, point: GeoPoint, range_: DateRange) -> list[DailyRecord]:
        records, _ = self.fetch_daily_series_info(point, range_)
        return records

    def fetch_daily_series_info(self, point: GeoPoint, range_: DateRange) -> tuple[list[DailyRecord], bool]:
        """Returns (records, cache_hit); one record per calendar day, ascending."""
        self.check_coverage(point, range_)
        key = CacheKey.for_request(point, range_, self.source_id)
        return self.cache.get_or_fetch_info(key, lambda: self._fetch_upstream(point, range_))

    def record_fixture(self, point: GeoPoint, range_: DateRange, out_dir: str | Path) -> Path:
        """Capture the raw upstream response into a fixture file."""
        if self.base_url is None:
            raise ValueError("fixture recording requires a live base_url")
        query = {
            "lat": point.latitude,
            "lon": point.longitude,
            "start": range_.start.strftime("%Y%m%d"),
            "finish": range_.end.strftime("%Y%m%d"),
            "format": "csv",
        }
        if self.ident_param:
            query["username"] = self.ident_param
        resp = requests.get(self.base_url, params=query, timeout=self.timeout)
        if resp.status_code != 200:
            raise NetworkError(f"upstream returned HTTP {resp.status_code}")
        out = Path(out_dir) / fixture_filename(point, range_)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(resp.text)
        return out
