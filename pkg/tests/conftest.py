"""Shared test fixtures: synthetic weather data and offline data sources."""

from __future__ import annotations

import datetime as dt
import math
import random

import pytest

from agroclim.datasource.client import WeatherDataSource, fixture_filename
from agroclim.datasource.types import DailyRecord, DateRange, GeoPoint

RIVERINA = GeoPoint(-34.56, 146.40)


def synth_records(start: dt.date, days: int, seed: int = 0) -> list[DailyRecord]:
    """Deterministic plausible daily weather for a southern-Australia site."""
    rng = random.Random(f"{start.toordinal()}:{days}:{seed}")
    records = []
    for n in range(days):
        date = start + dt.timedelta(days=n)
        doy = date.timetuple().tm_yday
        # southern hemisphere: warmest around mid January (doy ~15)
        seasonal = 8.0 * math.cos(2 * math.pi * (doy - 15) / 365.25)
        t_min = 10.0 + seasonal + rng.uniform(-3, 3)
        t_max = t_min + 9.0 + rng.uniform(-2, 4)
        rh_at_tmin = min(100.0, max(30.0, 85.0 + rng.uniform(-15, 10)))
        rh_at_tmax = min(100.0, max(5.0, 45.0 + rng.uniform(-20, 15)))
        records.append(
            DailyRecord(
                date=date,
                t_max=round(t_max, 1),
                t_min=round(t_min, 1),
                rain=round(max(0.0, rng.uniform(-8, 6)), 1),
                evaporation=round(max(0.0, 4.0 + rng.uniform(-2, 3)), 1),
                radiation=round(max(1.0, 18.0 + 8.0 * math.cos(2 * math.pi * (doy - 15) / 365.25) + rng.uniform(-4, 4)), 1),
                rh_at_tmax=round(rh_at_tmax, 1),
                rh_at_tmin=round(rh_at_tmin, 1),
                vapour_pressure=round(12.0 + rng.uniform(-4, 6), 1),
                mslp=round(1015.0 + rng.uniform(-10, 10), 1),
                et_short_crop=round(max(0.0, 3.5 + rng.uniform(-2, 2)), 1),
                et_tall_crop=round(max(0.0, 4.5 + rng.uniform(-2, 2)), 1),
            )
        )
    return records


SILO_HEADER = (
    "YYYY-MM-DD,daily_rain,daily_rain_source,max_temp,max_temp_source,"
    "min_temp,min_temp_source,vp,vp_source,evap_pan,evap_pan_source,"
    "radiation,radiation_source,rh_tmax,rh_tmax_source,rh_tmin,rh_tmin_source,"
    "mslp,mslp_source,et_short_crop,et_short_crop_source,et_tall_crop,et_tall_crop_source"
)


def silo_csv(records: list[DailyRecord]) -> str:
    """Serialize records in the upstream wire format."""
    def cell(v):
        return "" if v is None else f"{v}"

    lines = [SILO_HEADER]
    for r in records:
        lines.append(
            ",".join(
                [
                    r.date.isoformat(),
                    cell(r.rain), "0",
                    cell(r.t_max), "0",
                    cell(r.t_min), "0",
                    cell(r.vapour_pressure), "0",
                    cell(r.evaporation), "0",
                    cell(r.radiation), "0",
                    cell(r.rh_at_tmax), "0",
                    cell(r.rh_at_tmin), "0",
                    cell(r.mslp), "0",
                    cell(r.et_short_crop), "0",
                    cell(r.et_tall_crop), "0",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_fixture(fixture_dir, point: GeoPoint, range_: DateRange, records=None, seed: int = 0):
    """Materialize one upstream response as an offline fixture file."""
    if records is None:
        records = synth_records(range_.start, len(range_.days()), seed=seed)
    path = fixture_dir / fixture_filename(point, range_)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(silo_csv(records))
    return records


def seasonal_fixture_dir(tmp_path, day_zero: dt.date, length: int, years_back: int = 5,
                         point: GeoPoint = RIVERINA):
    """Fixture dir covering the current season plus years_back prior seasons."""
    fdir = tmp_path / "fixtures"
    fdir.mkdir(exist_ok=True)
    for back in range(0, years_back + 1):
        zero = day_zero.replace(year=day_zero.year - back)
        rng = DateRange(zero, zero + dt.timedelta(days=length - 1))
        write_fixture(fdir, point, rng, seed=back)
    return fdir


@pytest.fixture
def offline_source(tmp_path):
    """A WeatherDataSource in fixture mode with an empty cache."""
    fdir = tmp_path / "fixtures"
    fdir.mkdir()
    cdir = tmp_path / "cache"
    ds = WeatherDataSource(fixture_dir=fdir, cache_dir=cdir)
    ds.fixture_path = fdir  # convenience for tests adding fixtures
    return ds
