"""Pydantic request/response models for the JSON API."""

from __future__ import annotations

import datetime as dt

from pydantic import BaseModel, Field


class AttributeInfo(BaseModel):
    id: str
    name: str
    unit: str


class ReferenceInfo(BaseModel):
    mode: str  # "mean_of_last" | "single_season"
    year: int | None = None
    n_years: int | None = None


class StatsModel(BaseModel):
    min_value: float
    min_index: int
    max_value: float
    max_index: int
    mean: float
    last_value: float
    trend: str
    slope: float
    valid_count: int


class AlertModel(BaseModel):
    kind: str
    dates: list[dt.date]
    observed_extreme: float
    threshold: float


class ProvenanceModel(BaseModel):
    source: str
    fetched_at: dt.datetime | None = None
    cache_hit: bool


class AttributeSeriesModel(BaseModel):
    attribute: str
    name: str
    unit: str
    current: list[float | None]
    reference: list[float | None] | None = None
    difference: list[float | None] | None = None
    stats: StatsModel | None = None
    sentences: list[str] = Field(default_factory=list)
    low_confidence: bool = False
    gap_days: int = 0


class SeriesResponse(BaseModel):
    latitude: float
    longitude: float
    day_zero: dt.date
    length_days: int
    t_base: float
    gdd_method: str
    comparison: bool
    reference: ReferenceInfo | None = None
    attributes: list[AttributeSeriesModel]
    alerts: list[AlertModel]
    provenance: ProvenanceModel


class ReportRequest(BaseModel):
    latitude: float
    longitude: float
    day_zero: dt.date
    length_days: int
    attributes: list[str]
    comparison: bool = False
    reference: ReferenceInfo | None = None
    t_base: float | None = None
    gdd_method: str | None = None
    generated_at: dt.datetime | None = None


class PublicConfig(BaseModel):
    tile_street: str | None = None
    tile_satellite: str | None = None
    help_url: str | None = None
    default_t_base: float
    default_gdd_method: str
    default_reference_years: int
    alert_defaults: dict
    attributes: list[AttributeInfo]
    bounding_box: list[float]


class ErrorBody(BaseModel):
    code: str
    message: str
    details: dict = Field(default_factory=dict)
