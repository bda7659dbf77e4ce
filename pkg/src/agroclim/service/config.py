"""Service configuration: YAML file with environment-variable overrides.

Overrides are named AGROCLIM_<SECTION>_<KEY>, e.g. AGROCLIM_CACHE_DIR or
AGROCLIM_DATASOURCE_BASE_URL, and take precedence over the file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from ..catalog import CATALOG, default_ids
from ..core.gdd import GddMethod
from ..datasource.types import AUSTRALIA, BoundingBox

ENV_PREFIX = "AGROCLIM"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    listen_host: str = "127.0.0.1"
    listen_port: int = 8000
    cors_origin: str = "*"

    base_url: str | None = None
    fixture_dir: str | None = None
    ident_param: str | None = None
    bounding_box: BoundingBox = AUSTRALIA

    cache_dir: str = "./cache"
    ttl_seconds: int = 6 * 3600

    default_t_base: float = 10.0
    default_gdd_method: GddMethod = GddMethod.CLAMP_RESULT
    default_reference_years: int = 5

    alert_min: float | None = None
    alert_max: float | None = None
    alerts_enabled: bool = False
    alert_window_days: int = 9

    attribute_ids: tuple[str, ...] = field(default_factory=lambda: tuple(default_ids()))

    ui_asset_dir: str | None = None
    tile_street: str | None = None
    tile_satellite: str | None = None
    help_url: str | None = None

    def __post_init__(self):
        if (self.base_url is None) == (self.fixture_dir is None):
            raise ConfigError("exactly one of datasource.base_url / datasource.fixture_dir must be set")
        if self.default_reference_years < 1:
            raise ConfigError("defaults.reference_years must be >= 1")
        unknown = [a for a in self.attribute_ids if a not in CATALOG]
        if unknown:
            raise ConfigError(f"unknown catalog attributes: {', '.join(unknown)}")
        if self.fixture_dir is not None and not Path(self.fixture_dir).is_dir():
            raise ConfigError(f"fixture directory does not exist: {self.fixture_dir}")


def _env_overrides(environ) -> dict:
    out: dict = {}
    prefix = ENV_PREFIX + "_"
    for key, value in environ.items():
        if not key.startswith(prefix):
            continue
        rest = key[len(prefix):].lower()
        section, _, name = rest.partition("_")
        out.setdefault(section, {})[name] = value
    return out


def _merge(file_cfg: dict, env_cfg: dict) -> dict:
    merged = {k: dict(v) for k, v in file_cfg.items() if isinstance(v, dict)}
    for section, entries in env_cfg.items():
        merged.setdefault(section, {}).update(entries)
    return merged


def _get(cfg: dict, section: str, key: str, default=None):
    return cfg.get(section, {}).get(key, default)


def load_config(path: str | Path, environ=None) -> ServiceConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        file_cfg = yaml.safe_load(path.read_text()) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid config file {path}: {exc}") from exc
    if not isinstance(file_cfg, dict):
        raise ConfigError(f"config file {path} must be a mapping of sections")

    cfg = _merge(file_cfg, _env_overrides(environ if environ is not None else os.environ))

    def fnum(section, key, default, conv=float):
        raw = _get(cfg, section, key, default)
        if raw is None:
            return None
        try:
            return conv(raw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{section}.{key}: {exc}") from exc

    def fbool(section, key, default):
        raw = _get(cfg, section, key, default)
        if isinstance(raw, bool):
            return raw
        return str(raw).strip().lower() in ("1", "true", "yes", "on")

    bbox_raw = _get(cfg, "datasource", "bounding_box")
    if bbox_raw is None:
        bbox = AUSTRALIA
    else:
        try:
            lat_min, lat_max, lon_min, lon_max = (float(x) for x in bbox_raw)
            bbox = BoundingBox(lat_min, lat_max, lon_min, lon_max)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"datasource.bounding_box must be [lat_min, lat_max, lon_min, lon_max]: {exc}") from exc

    method_raw = str(_get(cfg, "defaults", "gdd_method", "clamp_result")).lower()
    try:
        method = GddMethod(method_raw)
    except ValueError:
        raise ConfigError(f"defaults.gdd_method must be one of "
                          f"{[m.value for m in GddMethod]}, got {method_raw!r}") from None

    attrs_raw = _get(cfg, "catalog", "attributes")
    if attrs_raw is None:
        attribute_ids = tuple(default_ids())
    elif isinstance(attrs_raw, str):
        attribute_ids = tuple(a.strip() for a in attrs_raw.split(",") if a.strip())
    else:
        attribute_ids = tuple(attrs_raw)

    try:
        return ServiceConfig(
            listen_host=str(_get(cfg, "service", "host", "127.0.0.1")),
            listen_port=fnum("service", "port", 8000, int),
            cors_origin=str(_get(cfg, "service", "cors_origin", "*")),
            base_url=_get(cfg, "datasource", "base_url"),
            fixture_dir=_get(cfg, "datasource", "fixture_dir"),
            ident_param=_get(cfg, "datasource", "ident"),
            bounding_box=bbox,
            cache_dir=str(_get(cfg, "cache", "dir", "./cache")),
            ttl_seconds=fnum("cache", "ttl_seconds", 6 * 3600, int),
            default_t_base=fnum("defaults", "t_base", 10.0),
            default_gdd_method=method,
            default_reference_years=fnum("defaults", "reference_years", 5, int),
            alert_min=fnum("alerts", "min_threshold", None),
            alert_max=fnum("alerts", "max_threshold", None),
            alerts_enabled=fbool("alerts", "enabled", False),
            alert_window_days=fnum("alerts", "window_days", 9, int),
            attribute_ids=attribute_ids,
            ui_asset_dir=_get(cfg, "ui", "asset_dir"),
            tile_street=_get(cfg, "ui", "tile_street"),
            tile_satellite=_get(cfg, "ui", "tile_satellite"),
            help_url=_get(cfg, "ui", "help_url"),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
