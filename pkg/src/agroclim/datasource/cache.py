"""File-backed record cache with single-flight get-or-fetch per key.

One file per cache key. Entries whose date range reaches the source's most
recent publishable day are volatile and expire after a TTL; everything
else is historical and immutable. Concurrent identical requests coalesce
onto one fetch via a per-key lock.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import logging
import os
import threading
from pathlib import Path

from .csvio import read_cache_csv, write_cache_csv
from .types import CacheKey, DailyRecord

log = logging.getLogger(__name__)

DEFAULT_TTL_SECONDS = 6 * 3600


def key_filename(key: CacheKey) -> str:
    digest = hashlib.sha256(key.canonical().encode()).hexdigest()[:24]
    return f"{digest}.csv"


class RecordCache:
    def __init__(self, directory: str | Path, ttl_seconds: int = DEFAULT_TTL_SECONDS,
                 clock=None):
        self.directory = Path(directory)
        self.ttl_seconds = ttl_seconds
        self._clock = clock or (lambda: dt.datetime.now(dt.timezone.utc))
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, name: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(name, threading.Lock())

    def last_publishable_day(self) -> dt.date:
        # the source publishes with a one-day lag
        return self._clock().date() - dt.timedelta(days=1)

    def _is_fresh(self, path: Path, key: CacheKey) -> bool:
        if not path.exists():
            return False
        if key.end < self.last_publishable_day():
            return True  # fully historical, immutable
        age = self._clock().timestamp() - path.stat().st_mtime
        return age < self.ttl_seconds

    def get_or_fetch(self, key: CacheKey, fetcher) -> list[DailyRecord]:
        records, _ = self.get_or_fetch_info(key, fetcher)
        return records

    def get_or_fetch_info(self, key: CacheKey, fetcher) -> tuple[list[DailyRecord], bool]:
        """Returns (records, cache_hit). fetcher runs at most once per key."""
        name = key_filename(key)
        path = self.directory / name
        with self._lock_for(name):
            if self._is_fresh(path, key):
                try:
                    return read_cache_csv(path.read_text()), True
                except OSError as exc:
                    log.warning("cache read failed for %s: %s", path, exc)
            records = fetcher()
            try:
                self.directory.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_text(write_cache_csv(records))
                os.replace(tmp, path)
                # freshness is judged against our clock, so stamp from it
                ts = self._clock().timestamp()
                os.utime(path, (ts, ts))
            except OSError as exc:
                # the request is still served; storage failure is non-fatal
                log.error("cache write failed for %s: %s", path, exc)
            return records, False

    def entry_mtime(self, key: CacheKey) -> dt.datetime | None:
        path = self.directory / key_filename(key)
        if not path.exists():
            return None
        return dt.datetime.fromtimestamp(path.stat().st_mtime, dt.timezone.utc)
