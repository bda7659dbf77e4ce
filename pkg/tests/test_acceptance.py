"""Acceptance suite: one test per release criterion, fixture-only (no network).

Run with `pytest tests/test_acceptance.py -s` to see one PASS/FAIL line per
criterion.
"""

import csv
import datetime as dt
import functools
import io
import math
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from agroclim.alerts import AlertConfig, AlertKind, evaluate_alerts
from agroclim.catalog import attribute
from agroclim.core import (
    DerivedSeries,
    GddMethod,
    SeasonSpec,
    cumulative_gdd,
    daily_gdd,
    difference_series,
    reference_series,
    slice_season,
    summary_stats,
    vpd,
)
from agroclim.datasource import (
    CacheKey,
    DailyRecord,
    DateRange,
    RecordCache,
    parse_daily_csv,
    read_cache_csv,
    validate_records,
    write_cache_csv,
)
from agroclim.report import NlgSummary, ReportSpec, compose_pdf, generate_summary, page_count, render_chart
from agroclim.service.app import create_app
from agroclim.service.config import ServiceConfig
from conftest import RIVERINA, seasonal_fixture_dir, synth_records

DAY_ZERO = dt.date(2021, 10, 1)


def criterion(name):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL: {name}", file=sys.stderr)
                raise
            print(f"PASS: {name}")
        return wrapper
    return deco


@criterion("VPD oracle equivalence (1e-9 over 10^4 inputs, spot values, < 1 s)")
def test_vpd_oracle_equivalence():
    def oracle(t_max, t_min, rh_at_tmax, rh_at_tmin):
        e_min = 0.6108 * math.exp(17.27 * t_min / (t_min + 237.3))
        e_max = 0.6108 * math.exp(17.27 * t_max / (t_max + 237.3))
        return (e_max + e_min) / 2 - (e_min * rh_at_tmin / 100 + e_max * rh_at_tmax / 100) / 2

    start = time.perf_counter()
    rng = random.Random(20211001)
    for _ in range(10_000):
        t_a, t_b = rng.uniform(-30, 55), rng.uniform(-30, 55)
        t_max, t_min = max(t_a, t_b), min(t_a, t_b)
        rh_tmax, rh_tmin = rng.uniform(0, 100), rng.uniform(0, 100)
        assert abs(vpd(t_max, t_min, rh_tmax, rh_tmin) - oracle(t_max, t_min, rh_tmax, rh_tmin)) < 1e-9
    elapsed = time.perf_counter() - start

    from agroclim.core import saturation_vp

    assert abs(saturation_vp(25) - 3.1676) < 1e-3
    assert abs(vpd(30, 15, 40, 80) - 1.4433) < 1e-3
    assert elapsed < 1.0, f"10^4 comparisons took {elapsed:.2f}s"


@criterion("GDD laws (non-negativity, method ordering, spot values, cumulative oracle)")
def test_gdd_laws():
    rng = random.Random(42)
    for _ in range(10_000):
        t_a, t_b, t_base = rng.uniform(-30, 55), rng.uniform(-30, 55), rng.uniform(-10, 25)
        t_max, t_min = max(t_a, t_b), min(t_a, t_b)
        by_result = daily_gdd(t_max, t_min, t_base, GddMethod.CLAMP_RESULT)
        by_components = daily_gdd(t_max, t_min, t_base, GddMethod.CLAMP_COMPONENTS)
        assert by_result >= 0.0 and by_components >= 0.0
        assert by_components >= by_result - 1e-12

    assert daily_gdd(30, 20, 10, GddMethod.CLAMP_RESULT) == 15.0
    assert daily_gdd(12, 4, 10, GddMethod.CLAMP_RESULT) == 0.0
    assert daily_gdd(12, 4, 10, GddMethod.CLAMP_COMPONENTS) == 1.0

    records = synth_records(dt.date(2020, 1, 1), 366)
    season = slice_season(records, SeasonSpec(dt.date(2020, 1, 1), 366), RIVERINA)
    series = cumulative_gdd(season)
    total = 0.0
    for n, rec in enumerate(season.records):
        total += max(0.0, (rec.t_max + rec.t_min) / 2.0 - 10.0)
        assert abs(series.values[n] - total) < 1e-9
    assert all(b >= a for a, b in zip(series.values, series.values[1:]))


@criterion("Comparison laws (zero self-difference, antisymmetry, mean identity, 42-day run)")
def test_comparison_laws():
    rng = random.Random(7)
    x = DerivedSeries("VPD", "kPa", tuple(rng.uniform(0, 3) for _ in range(120)))
    y = DerivedSeries("VPD", "kPa", tuple(rng.uniform(0, 3) for _ in range(120)))
    assert all(v == 0.0 for v in difference_series(x, x).difference.values)
    fwd = difference_series(x, y).difference.values
    bwd = difference_series(y, x).difference.values
    assert all(a == -b for a, b in zip(fwd, bwd))
    for n in (1, 3, 5):
        assert all(
            abs(a - b) < 1e-12
            for a, b in zip(reference_series([x] * n).values, x.values)
        )

    current = DerivedSeries("VPD", "kPa", tuple([1.2] * 30 + [0.4] * 42 + [1.2] * 48))
    reference = DerivedSeries("VPD", "kPa", tuple([1.0] * 120))
    cmp_ = difference_series(current, reference)
    negatives = [i for i, v in enumerate(cmp_.difference.values) if v < 0]
    assert len(negatives) == 42
    assert negatives == list(range(30, 72))
    summary = generate_summary(
        attribute("VPD"), summary_stats(current), cmp_, SeasonSpec(DAY_ZERO, 120), RIVERINA
    )
    assert any(re.search(r"\b42 days\b", s) for s in summary.sentences)


@criterion("Alert contract (below-min, above-max, boundary, disabled, window anchoring)")
def test_alert_contract():
    def recs(pairs):
        return [
            DailyRecord(date=DAY_ZERO + dt.timedelta(days=i), t_min=lo, t_max=hi)
            for i, (lo, hi) in enumerate(pairs)
        ]

    below = evaluate_alerts(recs([(18, 30)] * 8 + [(12, 28)]), AlertConfig(min_threshold=15))
    assert [a.kind for a in below] == [AlertKind.BELOW_MIN]
    assert below[0].observed_extreme == 12

    above = evaluate_alerts(recs([(20, 41)] * 9), AlertConfig(max_threshold=40))
    assert [a.kind for a in above] == [AlertKind.ABOVE_MAX]

    assert evaluate_alerts(recs([(15, 40)] * 9), AlertConfig(min_threshold=15, max_threshold=40)) == []
    assert evaluate_alerts(recs([(0, 99)] * 9), AlertConfig(min_threshold=15, max_threshold=40, enabled=False)) == []

    # cold night 10 records back sits outside the window until newer records are truncated
    anchored = recs([(10, 30)] + [(18, 30)] * 9)
    assert evaluate_alerts(anchored, AlertConfig(min_threshold=15)) == []
    assert evaluate_alerts(anchored[:-1], AlertConfig(min_threshold=15)) != []


def _count_pages(data: bytes) -> int:
    return len(re.findall(rb"/Type\s*/Page[^s]", data))


@criterion("Report pipeline (page-count law, structural validity, byte determinism)")
def test_report_pipeline():
    def build(n):
        spec = ReportSpec(
            point=RIVERINA,
            season=SeasonSpec(DAY_ZERO, 8),
            attributes=tuple(f"ATTR{i}" for i in range(n)),
            generated_at=dt.datetime(2022, 4, 1, tzinfo=dt.timezone.utc),
        )
        chart = render_chart(DerivedSeries("T_MAX", "°C", (9.0, 12.0, 8.0, 14.0, 11.0, 15.0, 10.0, 13.0)))
        summaries = [NlgSummary(f"ATTR{i}", ("Sentence one.", "Sentence two."), False) for i in range(n)]
        return compose_pdf(spec, [chart] * n, summaries)

    for n in (1, 6, 7, 18):
        data = build(n)
        assert data.startswith(b"%PDF-")
        assert b"%%EOF" in data[-64:]
        assert _count_pages(data) == page_count(n) == math.ceil(n / 6)
    assert build(7) == build(7)


@criterion("Service contract (byte-identical replay, request coalescing, error taxonomy)")
def test_service_contract(tmp_path):
    fdir = seasonal_fixture_dir(tmp_path, DAY_ZERO, 180)
    cfg = ServiceConfig(fixture_dir=str(fdir), cache_dir=str(tmp_path / "cache"))
    app = create_app(cfg)
    with TestClient(app, raise_server_exceptions=False) as client:
        params = {
            "lat": RIVERINA.latitude, "lon": RIVERINA.longitude,
            "day_zero": DAY_ZERO.isoformat(), "length_days": 180,
            "attributes": "VPD", "comparison": "true",
        }
        client.get("/api/v1/series", params=params)  # warm
        assert (
            client.get("/api/v1/series", params=params).content
            == client.get("/api/v1/series", params=params).content
        )

        assert client.get("/api/v1/series", params=dict(params, length_days=0)).status_code == 400
        assert client.get("/api/v1/series", params=dict(params, lat=0, lon=0)).status_code == 404
        future = (dt.date.today() + dt.timedelta(days=3)).isoformat()
        assert client.get(
            "/api/v1/series", params=dict(params, day_zero=future, length_days=5)
        ).status_code == 422

    # request coalescing, against a cold cache
    cold_cfg = ServiceConfig(fixture_dir=str(fdir), cache_dir=str(tmp_path / "cache_cold"))
    cold_app = create_app(cold_cfg)
    with TestClient(cold_app, raise_server_exceptions=False) as client:
        quick = {
            "lat": RIVERINA.latitude, "lon": RIVERINA.longitude,
            "day_zero": DAY_ZERO.isoformat(), "length_days": 180,
            "attributes": "T_MAX", "comparison": "false",
        }
        with ThreadPoolExecutor(16) as pool:
            statuses = list(
                pool.map(lambda _: client.get("/api/v1/series", params=quick).status_code, range(64))
            )
        assert statuses == [200] * 64
        assert cold_app.state.datasource.upstream_reads == 1

    bad_cfg = ServiceConfig(base_url="http://127.0.0.1:9/x", cache_dir=str(tmp_path / "cache2"))
    with TestClient(create_app(bad_cfg), raise_server_exceptions=False) as client:
        resp = client.get(
            "/api/v1/series",
            params={"lat": RIVERINA.latitude, "lon": RIVERINA.longitude,
                    "day_zero": DAY_ZERO.isoformat(), "length_days": 5,
                    "attributes": "T_MAX", "comparison": "false"},
        )
        assert resp.status_code == 502
        assert {"code", "message", "details"} <= set(resp.json())


@criterion("Datasource robustness (column permutation, demotion, round-trip, TTL)")
def test_datasource_robustness(tmp_path):
    fixture = (Path(__file__).parent / "fixtures" / "silo_sample.csv").read_text()
    rows = list(csv.reader(io.StringIO(fixture)))
    permuted = "\n".join(",".join(row[i] for i in reversed(range(len(rows[0])))) for row in rows)
    assert parse_daily_csv(permuted) == parse_daily_csv(fixture)

    bad = DailyRecord(date=DAY_ZERO, t_max=20.0, t_min=25.0, rh_at_tmax=105.0, rain=-1.0)
    cleaned, violations = validate_records([bad])
    assert cleaned[0].t_max is None and cleaned[0].t_min is None
    assert cleaned[0].rh_at_tmax is None and cleaned[0].rain is None
    assert len(violations) == 3

    records = synth_records(DAY_ZERO, 30)
    assert read_cache_csv(write_cache_csv(records)) == records

    now = [dt.datetime(2021, 10, 31, 12, 0, tzinfo=dt.timezone.utc)]
    cache = RecordCache(tmp_path, ttl_seconds=3600, clock=lambda: now[0])
    key = CacheKey.for_request(RIVERINA, DateRange(DAY_ZERO, dt.date(2021, 10, 30)), "t")
    calls = []
    fetcher = lambda: calls.append(1) or records
    cache.get_or_fetch(key, fetcher)
    cache.get_or_fetch(key, fetcher)
    assert len(calls) == 1
    now[0] += dt.timedelta(hours=2)
    cache.get_or_fetch(key, fetcher)
    assert len(calls) == 2
