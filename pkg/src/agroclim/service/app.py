"""HTTP API: attribute catalog, series analysis, PDF reports, UI hosting.

Anticipated failures map onto a fixed taxonomy, always with a structured
JSON body {code, message, details}:

  400  invalid request parameters (every violation named)
  404  point or request outside data-source coverage
  422  dates beyond published data, or a report layout failure
  502  upstream data source unreachable
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import catalog
from ..alerts import AlertConfig
from ..core.compare import ReferenceKind
from ..core.errors import DomainError, EmptySeries, InsufficientData
from ..core.gdd import GddMethod
from ..core.season import SeasonSpec
from ..datasource.client import WeatherDataSource
from ..datasource.types import GeoPoint, NetworkError, OutOfCoverage, ParseError
from ..report.pdf import LayoutError
from .config import ServiceConfig
from .models import AttributeInfo, ErrorBody, PublicConfig, ReportRequest, SeriesResponse
from .pipeline import AnalysisParams, analyze, build_report

API_PREFIX = "/api/v1"


class BadRequest(ValueError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


def _error(status: int, code: str, message: str, details: dict | None = None) -> JSONResponse:
    body = ErrorBody(code=code, message=message, details=details or {})
    return JSONResponse(status_code=status, content=body.model_dump())


def create_app(cfg: ServiceConfig, datasource: WeatherDataSource | None = None) -> FastAPI:
    app = FastAPI(title="agroclim weather analysis service", version="0.1.0")
    ds = datasource or WeatherDataSource(
        base_url=cfg.base_url,
        fixture_dir=cfg.fixture_dir,
        ident_param=cfg.ident_param,
        cache_dir=cfg.cache_dir,
        ttl_seconds=cfg.ttl_seconds,
        bounding_box=cfg.bounding_box,
    )
    app.state.config = cfg
    app.state.datasource = ds

    if cfg.cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"] if cfg.cors_origin == "*" else [cfg.cors_origin],
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(BadRequest)
    async def bad_request_handler(request: Request, exc: BadRequest):
        return _error(400, "invalid_parameters", "request parameters are invalid",
                      {"violations": exc.violations})

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        violations = [
            f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors()
        ]
        return _error(400, "invalid_parameters", "request parameters are invalid",
                      {"violations": violations})

    @app.exception_handler(OutOfCoverage)
    async def coverage_handler(request: Request, exc: OutOfCoverage):
        return _error(404, "out_of_coverage", str(exc), {"request": exc.request})

    @app.exception_handler(InsufficientData)
    async def insufficient_handler(request: Request, exc: InsufficientData):
        return _error(422, "insufficient_data", str(exc),
                      {"missing_dates": [str(d) for d in exc.missing_dates]})

    @app.exception_handler(EmptySeries)
    async def empty_handler(request: Request, exc: EmptySeries):
        return _error(422, "empty_series", str(exc))

    @app.exception_handler(LayoutError)
    async def layout_handler(request: Request, exc: LayoutError):
        return _error(422, "layout_error", str(exc))

    @app.exception_handler(NetworkError)
    async def network_handler(request: Request, exc: NetworkError):
        return _error(502, "upstream_error", str(exc), {"request": exc.request})

    @app.exception_handler(ParseError)
    async def parse_handler(request: Request, exc: ParseError):
        return _error(502, "upstream_parse_error", str(exc),
                      {"line": exc.line, "column": exc.column})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get(API_PREFIX + "/attributes", response_model=list[AttributeInfo])
    def attributes(request: Request, response: Response):
        items = [
            AttributeInfo(id=a.id, name=a.name, unit=a.unit)
            for a in (catalog.attribute(i) for i in cfg.attribute_ids)
        ]
        body = json.dumps([i.model_dump() for i in items], separators=(",", ":"))
        etag = '"' + hashlib.sha256(body.encode()).hexdigest()[:16] + '"'
        if request.headers.get("if-none-match") == etag:
            return Response(status_code=304, headers={"ETag": etag})
        response.headers["ETag"] = etag
        return items

    @app.get(API_PREFIX + "/config/public", response_model=PublicConfig)
    def public_config():
        # deliberately excludes cache paths and the upstream ident parameter
        bbox = cfg.bounding_box
        return PublicConfig(
            tile_street=cfg.tile_street,
            tile_satellite=cfg.tile_satellite,
            help_url=cfg.help_url,
            default_t_base=cfg.default_t_base,
            default_gdd_method=cfg.default_gdd_method.value,
            default_reference_years=cfg.default_reference_years,
            alert_defaults={
                "min_threshold": cfg.alert_min,
                "max_threshold": cfg.alert_max,
                "enabled": cfg.alerts_enabled,
                "window_days": cfg.alert_window_days,
            },
            attributes=[
                AttributeInfo(id=a.id, name=a.name, unit=a.unit)
                for a in (catalog.attribute(i) for i in cfg.attribute_ids)
            ],
            bounding_box=[bbox.lat_min, bbox.lat_max, bbox.lon_min, bbox.lon_max],
        )

    @app.get(API_PREFIX + "/series", response_model=SeriesResponse, response_model_exclude_none=False)
    def series(
        lat: str = "", lon: str = "", day_zero: str = "", length_days: str = "",
        attributes: str = "", comparison: str = "false", reference: str = "",
        t_base: str = "", gdd_method: str = "",
        alert_min: str = "", alert_max: str = "", alerts_enabled: str = "",
    ):
        params = _parse_series_params(
            cfg, lat=lat, lon=lon, day_zero=day_zero, length_days=length_days,
            attributes=attributes, comparison=comparison, reference=reference,
            t_base=t_base, gdd_method=gdd_method,
            alert_min=alert_min, alert_max=alert_max, alerts_enabled=alerts_enabled,
        )
        return analyze(ds, cfg, params)

    @app.post(API_PREFIX + "/report")
    def report(body: ReportRequest):
        params = _report_params(cfg, body)
        pdf = build_report(ds, cfg, params, generated_at=body.generated_at)
        return Response(content=pdf, media_type="application/pdf")

    if cfg.ui_asset_dir:
        app.mount("/", StaticFiles(directory=cfg.ui_asset_dir, html=True), name="ui")

    return app


def _parse_float(violations, name, raw, required=True):
    if raw == "" or raw is None:
        if required:
            violations.append(f"{name}: required")
        return None
    try:
        return float(raw)
    except ValueError:
        violations.append(f"{name}: not a number ({raw!r})")
        return None


def _parse_bool(raw: str) -> bool:
    return str(raw).strip().lower() in ("1", "true", "yes", "on")


def _parse_reference(violations, raw: str, default_years: int) -> ReferenceKind:
    """'mean:5' or 'season:2020'; empty means the configured default mean."""
    if not raw:
        return ReferenceKind.mean_of_last(default_years)
    kind, _, arg = raw.partition(":")
    try:
        if kind == "mean":
            n = int(arg) if arg else default_years
            if n < 1:
                raise ValueError
            return ReferenceKind.mean_of_last(n)
        if kind == "season":
            return ReferenceKind.single_season(int(arg))
    except ValueError:
        pass
    violations.append(f"reference: expected 'mean:N' or 'season:YYYY', got {raw!r}")
    return ReferenceKind.mean_of_last(default_years)


def _parse_series_params(cfg: ServiceConfig, **raw) -> AnalysisParams:
    violations: list[str] = []

    lat = _parse_float(violations, "lat", raw["lat"])
    lon = _parse_float(violations, "lon", raw["lon"])

    day_zero = None
    if not raw["day_zero"]:
        violations.append("day_zero: required")
    else:
        try:
            day_zero = dt.date.fromisoformat(raw["day_zero"])
        except ValueError:
            violations.append(f"day_zero: not an ISO date ({raw['day_zero']!r})")

    length_days = None
    try:
        length_days = int(raw["length_days"])
        if not 1 <= length_days <= 366:
            violations.append(f"length_days: must be in [1, 366], got {length_days}")
            length_days = None
    except (TypeError, ValueError):
        violations.append(f"length_days: not an integer ({raw['length_days']!r})")

    attr_ids = tuple(a.strip() for a in raw["attributes"].split(",") if a.strip())
    if not attr_ids:
        violations.append("attributes: at least one attribute id required")
    unknown = [a for a in attr_ids if a not in catalog.CATALOG]
    if unknown:
        violations.append(f"attributes: unknown ids {', '.join(unknown)}")
    if len(set(attr_ids)) != len(attr_ids):
        violations.append("attributes: duplicate ids")

    t_base = cfg.default_t_base
    if raw["t_base"]:
        t_base = _parse_float(violations, "t_base", raw["t_base"]) or t_base

    method = cfg.default_gdd_method
    if raw["gdd_method"]:
        try:
            method = GddMethod(raw["gdd_method"].lower())
        except ValueError:
            violations.append(f"gdd_method: must be one of {[m.value for m in GddMethod]}")

    comparison = _parse_bool(raw["comparison"])
    reference = _parse_reference(violations, raw["reference"], cfg.default_reference_years)

    alert_min = _parse_float(violations, "alert_min", raw["alert_min"], required=False)
    alert_max = _parse_float(violations, "alert_max", raw["alert_max"], required=False)
    if alert_min is None:
        alert_min = cfg.alert_min
    if alert_max is None:
        alert_max = cfg.alert_max
    alerts_enabled = _parse_bool(raw["alerts_enabled"]) if raw["alerts_enabled"] else cfg.alerts_enabled
    if alert_min is not None and alert_max is not None and not alert_min < alert_max:
        violations.append(f"alert thresholds: min ({alert_min}) must be below max ({alert_max})")

    if violations:
        raise BadRequest(violations)

    try:
        season = SeasonSpec(day_zero, length_days, t_base)
        point = GeoPoint(lat, lon)
        alert_config = AlertConfig(
            min_threshold=alert_min, max_threshold=alert_max,
            enabled=alerts_enabled, window_days=cfg.alert_window_days,
        )
    except (DomainError, ValueError) as exc:
        raise BadRequest([str(exc)]) from exc

    return AnalysisParams(
        point=point,
        season=season,
        attributes=attr_ids,
        comparison=comparison,
        reference_kind=reference,
        gdd_method=method,
        alert_config=alert_config,
    )


def _report_params(cfg: ServiceConfig, body: ReportRequest) -> AnalysisParams:
    violations: list[str] = []
    if not body.attributes:
        violations.append("attributes: at least one attribute id required")
    unknown = [a for a in body.attributes if a not in catalog.CATALOG]
    if unknown:
        violations.append(f"attributes: unknown ids {', '.join(unknown)}")
    if len(set(body.attributes)) != len(body.attributes):
        violations.append("attributes: duplicate ids")
    if not 1 <= body.length_days <= 366:
        violations.append(f"length_days: must be in [1, 366], got {body.length_days}")

    method = cfg.default_gdd_method
    if body.gdd_method:
        try:
            method = GddMethod(body.gdd_method.lower())
        except ValueError:
            violations.append(f"gdd_method: must be one of {[m.value for m in GddMethod]}")

    if body.reference is None:
        reference = ReferenceKind.mean_of_last(cfg.default_reference_years)
    elif body.reference.mode == "single_season" and body.reference.year is not None:
        reference = ReferenceKind.single_season(body.reference.year)
    elif body.reference.mode == "mean_of_last":
        reference = ReferenceKind.mean_of_last(body.reference.n_years or cfg.default_reference_years)
    else:
        violations.append(f"reference: unknown mode {body.reference.mode!r}")
        reference = ReferenceKind.mean_of_last(cfg.default_reference_years)

    if violations:
        raise BadRequest(violations)

    try:
        season = SeasonSpec(body.day_zero, body.length_days,
                            body.t_base if body.t_base is not None else cfg.default_t_base)
        point = GeoPoint(body.latitude, body.longitude)
    except (DomainError, ValueError) as exc:
        raise BadRequest([str(exc)]) from exc

    return AnalysisParams(
        point=point,
        season=season,
        attributes=tuple(body.attributes),
        comparison=body.comparison,
        reference_kind=reference,
        gdd_method=method,
        alert_config=AlertConfig(enabled=False),
    )
