import datetime as dt
import re
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from agroclim.service.app import create_app
from agroclim.service.config import ConfigError, ServiceConfig, load_config
from conftest import RIVERINA, seasonal_fixture_dir

DAY_ZERO = dt.date(2021, 10, 1)
LENGTH = 180


def make_config(tmp_path, **overrides):
    fdir = seasonal_fixture_dir(tmp_path, DAY_ZERO, LENGTH)
    defaults = dict(
        fixture_dir=str(fdir),
        cache_dir=str(tmp_path / "cache"),
        tile_street="https://tiles.example/street/{z}/{x}/{y}.png",
        tile_satellite="https://tiles.example/sat/{z}/{x}/{y}.jpg",
        help_url="https://example.com/help.pdf",
        ident_param="secret-ident",
    )
    defaults.update(overrides)
    return ServiceConfig(**defaults)


@pytest.fixture
def client(tmp_path):
    app = create_app(make_config(tmp_path))
    with TestClient(app, raise_server_exceptions=False) as c:
        c.app = app
        yield c


def series_params(**overrides):
    params = {
        "lat": RIVERINA.latitude,
        "lon": RIVERINA.longitude,
        "day_zero": DAY_ZERO.isoformat(),
        "length_days": LENGTH,
        "attributes": "VPD",
        "comparison": "true",
    }
    params.update(overrides)
    return params


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_attribute_catalog_has_18_entries(client):
    resp = client.get("/api/v1/attributes")
    body = resp.json()
    assert len(body) == 18
    assert {"id", "name", "unit"} <= set(body[0])
    assert len({a["id"] for a in body}) == 18


def test_attribute_catalog_override(tmp_path):
    cfg = make_config(tmp_path, attribute_ids=("T_MAX", "RAIN", "VPD"))
    with TestClient(create_app(cfg)) as client:
        assert len(client.get("/api/v1/attributes").json()) == 3


def test_attributes_etag(client):
    first = client.get("/api/v1/attributes")
    etag = first.headers["ETag"]
    assert client.get("/api/v1/attributes").content == first.content
    cached = client.get("/api/v1/attributes", headers={"If-None-Match": etag})
    assert cached.status_code == 304


def test_public_config_bootstrap(client):
    body = client.get("/api/v1/config/public").json()
    assert body["tile_street"].startswith("https://tiles.example/street")
    assert body["tile_satellite"].startswith("https://tiles.example/sat")
    assert body["help_url"]
    text = str(body)
    assert "cache" not in text
    assert "secret-ident" not in text


def test_series_difference_matches_oracle_subtraction(client):
    resp = client.get("/api/v1/series", params=series_params())
    assert resp.status_code == 200
    body = resp.json()
    assert body["comparison"] is True
    assert body["reference"]["mode"] == "mean_of_last"
    assert body["reference"]["n_years"] == 5
    attr = body["attributes"][0]
    assert attr["attribute"] == "VPD"
    assert len(attr["current"]) == LENGTH
    assert len(attr["reference"]) == LENGTH
    for c, r, d in zip(attr["current"], attr["reference"], attr["difference"]):
        if c is None or r is None:
            assert d is None
        else:
            assert d == pytest.approx(c - r, abs=1e-12)
    assert attr["sentences"]


def test_series_response_attribute_set_matches_request(client):
    resp = client.get("/api/v1/series", params=series_params(attributes="T_MAX,RAIN,GDD_CUMULATIVE"))
    body = resp.json()
    assert [a["attribute"] for a in body["attributes"]] == ["T_MAX", "RAIN", "GDD_CUMULATIVE"]


def test_series_replays_byte_identically(client):
    params = series_params()
    client.get("/api/v1/series", params=params)  # warm the cache
    first = client.get("/api/v1/series", params=params)
    second = client.get("/api/v1/series", params=params)
    assert first.content == second.content


def test_series_validation_errors_are_named(client):
    resp = client.get("/api/v1/series", params=series_params(length_days=0, lat="abc"))
    assert resp.status_code == 400
    body = resp.json()
    assert body["code"] == "invalid_parameters"
    violations = " ".join(body["details"]["violations"])
    assert "length_days" in violations
    assert "lat" in violations


def test_series_unknown_attribute_is_400(client):
    resp = client.get("/api/v1/series", params=series_params(attributes="NOPE"))
    assert resp.status_code == 400
    assert "NOPE" in str(resp.json()["details"])


def test_series_out_of_coverage_is_404(client):
    resp = client.get("/api/v1/series", params=series_params(lat=0.0, lon=0.0))
    assert resp.status_code == 404
    assert resp.json()["code"] == "out_of_coverage"


def test_series_beyond_published_data_is_422(client):
    future = (dt.date.today() + dt.timedelta(days=5)).isoformat()
    resp = client.get("/api/v1/series", params=series_params(day_zero=future, length_days=10))
    assert resp.status_code == 422
    assert resp.json()["code"] == "insufficient_data"


def test_upstream_failure_is_502(tmp_path):
    cfg = ServiceConfig(base_url="http://127.0.0.1:9/unreachable", cache_dir=str(tmp_path / "cache"))
    with TestClient(create_app(cfg), raise_server_exceptions=False) as client:
        resp = client.get("/api/v1/series", params=series_params(comparison="false"))
    assert resp.status_code == 502
    body = resp.json()
    assert body["code"] == "upstream_error"
    assert {"code", "message", "details"} <= set(body)


def test_concurrent_series_trigger_one_upstream_read_per_key(client):
    params = series_params(attributes="T_MAX", comparison="false")

    def call(_):
        return client.get("/api/v1/series", params=params).status_code

    with ThreadPoolExecutor(16) as pool:
        statuses = list(pool.map(call, range(64)))
    assert statuses == [200] * 64
    assert client.app.state.datasource.upstream_reads == 1


def test_series_includes_alerts_when_enabled(client):
    resp = client.get(
        "/api/v1/series",
        params=series_params(alerts_enabled="true", alert_min="50"),
    )
    body = resp.json()
    assert body["alerts"], "a 50 degree min threshold must trip on synthetic data"
    alert = body["alerts"][0]
    assert alert["kind"] == "below_min"
    assert alert["observed_extreme"] < 50
    assert 1 <= len(alert["dates"]) <= 9


def test_series_invalid_threshold_pair_is_400(client):
    resp = client.get(
        "/api/v1/series",
        params=series_params(alerts_enabled="true", alert_min="30", alert_max="20"),
    )
    assert resp.status_code == 400


def count_pdf_pages(data: bytes) -> int:
    return len(re.findall(rb"/Type\s*/Page[^s]", data))


def report_body(attributes, **overrides):
    body = {
        "latitude": RIVERINA.latitude,
        "longitude": RIVERINA.longitude,
        "day_zero": DAY_ZERO.isoformat(),
        "length_days": LENGTH,
        "attributes": attributes,
        "comparison": False,
        "generated_at": "2022-04-01T00:00:00Z",
    }
    body.update(overrides)
    return body


SIX = ["T_MAX", "T_MIN", "RAIN", "VPD", "GDD_CUMULATIVE", "RADIATION"]


def test_report_six_attributes_is_one_page(client):
    resp = client.post("/api/v1/report", json=report_body(SIX))
    assert resp.status_code == 200
    assert resp.headers["content-type"] == "application/pdf"
    assert resp.content.startswith(b"%PDF-")
    assert count_pdf_pages(resp.content) == 1


def test_report_18_attributes_is_three_pages(client):
    all_ids = [a["id"] for a in client.get("/api/v1/attributes").json()]
    resp = client.post("/api/v1/report", json=report_body(all_ids))
    assert resp.status_code == 200
    assert count_pdf_pages(resp.content) == 3


def test_report_pinned_timestamp_is_deterministic(client):
    body = report_body(SIX, comparison=True)
    first = client.post("/api/v1/report", json=body)
    second = client.post("/api/v1/report", json=body)
    assert first.content == second.content


def test_report_validation_error_is_400(client):
    resp = client.post("/api/v1/report", json=report_body([]))
    assert resp.status_code == 400


def test_report_malformed_body_is_400(client):
    resp = client.post("/api/v1/report", json={"latitude": "x"})
    assert resp.status_code == 400
    assert resp.json()["code"] == "invalid_parameters"


def test_config_loader_roundtrip(tmp_path):
    fdir = seasonal_fixture_dir(tmp_path, DAY_ZERO, 10)
    cfg_file = tmp_path / "svc.yaml"
    cfg_file.write_text(
        f"""
datasource:
  fixture_dir: {fdir}
cache:
  dir: {tmp_path / 'cache'}
  ttl_seconds: 60
defaults:
  t_base: 12.5
  gdd_method: clamp_components
"""
    )
    cfg = load_config(cfg_file)
    assert cfg.default_t_base == 12.5
    assert cfg.default_gdd_method.value == "clamp_components"
    assert cfg.ttl_seconds == 60


def test_config_env_overrides(tmp_path):
    fdir = seasonal_fixture_dir(tmp_path, DAY_ZERO, 10)
    cfg_file = tmp_path / "svc.yaml"
    cfg_file.write_text(f"datasource:\n  fixture_dir: {fdir}\n")
    cfg = load_config(cfg_file, environ={"AGROCLIM_DEFAULTS_T_BASE": "15"})
    assert cfg.default_t_base == 15.0


def test_config_rejects_both_transports(tmp_path):
    cfg_file = tmp_path / "svc.yaml"
    cfg_file.write_text("datasource:\n  base_url: http://x\n  fixture_dir: /tmp\n")
    with pytest.raises(ConfigError):
        load_config(cfg_file)


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml")
