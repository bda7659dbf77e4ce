"""Command-line entry points: serve the API, or run it offline.

`report` and `fetch` are thin clients over the same service code paths the
HTTP API uses, so their outputs match what the endpoints would return.

Exit codes: 0 success, 1 configuration error, 2 runtime error.
"""

from __future__ import annotations

import datetime as dt
import sys

import click

from .datasource.client import WeatherDataSource
from .datasource.types import DataSourceError, DateRange, GeoPoint
from .service.config import ConfigError, load_config


def _load(config_path: str):
    try:
        return load_config(config_path)
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(1)


def _datasource(cfg) -> WeatherDataSource:
    return WeatherDataSource(
        base_url=cfg.base_url,
        fixture_dir=cfg.fixture_dir,
        ident_param=cfg.ident_param,
        cache_dir=cfg.cache_dir,
        ttl_seconds=cfg.ttl_seconds,
        bounding_box=cfg.bounding_box,
    )


@click.group()
def main():
    """Agro-climatic weather analysis service."""


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
def serve(config_path):
    """Run the HTTP service until signalled."""
    import uvicorn

    from .service.app import create_app

    cfg = _load(config_path)
    app = create_app(cfg)
    uvicorn.run(app, host=cfg.listen_host, port=cfg.listen_port)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--lat", required=True, type=float)
@click.option("--lon", required=True, type=float)
@click.option("--start", "day_zero", required=True, help="day-zero date, ISO format")
@click.option("--days", "length_days", required=True, type=int)
@click.option("--attrs", required=True, help="comma-separated attribute ids")
@click.option("--comparison/--no-comparison", default=False)
@click.option("--out", required=True, type=click.Path())
@click.option("--timestamp", default=None, help="pin the generation timestamp (ISO) for reproducible output")
def report(config_path, lat, lon, day_zero, length_days, attrs, comparison, out, timestamp):
    """Generate a PDF report offline; same bytes as POST /api/v1/report."""
    from fastapi.testclient import TestClient

    from .service.app import create_app

    cfg = _load(config_path)
    body = {
        "latitude": lat,
        "longitude": lon,
        "day_zero": day_zero,
        "length_days": length_days,
        "attributes": [a.strip() for a in attrs.split(",") if a.strip()],
        "comparison": comparison,
    }
    if timestamp:
        body["generated_at"] = timestamp
    with TestClient(create_app(cfg), raise_server_exceptions=False) as client:
        resp = client.post("/api/v1/report", json=body)
    if resp.status_code != 200:
        click.echo(f"report failed ({resp.status_code}): {resp.text}", err=True)
        sys.exit(2)
    with open(out, "wb") as fh:
        fh.write(resp.content)
    click.echo(f"wrote {out} ({len(resp.content)} bytes)")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--lat", required=True, type=float)
@click.option("--lon", required=True, type=float)
@click.option("--start", required=True, help="range start date, ISO format")
@click.option("--end", required=True, help="range end date, ISO format")
@click.option("--record-to", default=None, type=click.Path(),
              help="also capture the raw upstream response as a fixture file")
def fetch(config_path, lat, lon, start, end, record_to):
    """Warm the cache for one request (optionally recording a fixture)."""
    cfg = _load(config_path)
    ds = _datasource(cfg)
    try:
        point = GeoPoint(lat, lon)
        range_ = DateRange(dt.date.fromisoformat(start), dt.date.fromisoformat(end))
        records, cache_hit = ds.fetch_daily_series_info(point, range_)
        click.echo(f"{len(records)} records ({'cache hit' if cache_hit else 'fetched upstream'})")
        if record_to:
            path = ds.record_fixture(point, range_, record_to)
            click.echo(f"fixture recorded: {path}")
    except (DataSourceError, ValueError) as exc:
        click.echo(f"fetch failed: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
