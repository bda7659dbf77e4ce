"""End-to-end analysis pipeline: fetch, derive, compare, summarize, alert.

Shared by the /series and /report endpoints and the offline CLI so every
surface produces identical results for identical inputs.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from .. import catalog
from ..alerts import AlertConfig, evaluate_alerts
from ..core.compare import ComparisonResult, ReferenceKind, difference_series, reference_series
from ..core.errors import EmptySeries, InsufficientData
from ..core.gdd import GddMethod
from ..core.season import DerivedSeries, SeasonSpec, derive_attribute, shift_years, slice_season
from ..core.stats import summary_stats
from ..datasource.client import WeatherDataSource
from ..datasource.types import CacheKey, DateRange, GeoPoint
from ..report.charts import ChartStyle, render_chart
from ..report.nlg import NlgSummary, generate_summary
from ..report.pdf import ReportSpec, compose_pdf
from .config import ServiceConfig
from .models import (
    AlertModel,
    AttributeSeriesModel,
    ProvenanceModel,
    ReferenceInfo,
    SeriesResponse,
    StatsModel,
)


@dataclass(frozen=True)
class AnalysisParams:
    point: GeoPoint
    season: SeasonSpec
    attributes: tuple[str, ...]
    comparison: bool
    reference_kind: ReferenceKind
    gdd_method: GddMethod
    alert_config: AlertConfig


def season_range(spec: SeasonSpec) -> DateRange:
    return DateRange(spec.day_zero, spec.day_zero + dt.timedelta(days=spec.length_days - 1))


def reference_years(kind: ReferenceKind, day_zero: dt.date) -> list[int]:
    """Years-back offsets for the requested reference."""
    if kind.mode == "single_season":
        back = day_zero.year - kind.year
        if back < 1:
            raise InsufficientData([])
        return [back]
    return list(range(1, kind.n_years + 1))


def check_published(ds: WeatherDataSource, range_: DateRange) -> None:
    last = ds.cache.last_publishable_day()
    if range_.end > last:
        raise InsufficientData([d for d in range_.days() if d > last])


def analyze(ds: WeatherDataSource, cfg: ServiceConfig, params: AnalysisParams) -> SeriesResponse:
    spec = params.season
    current_range = season_range(spec)
    check_published(ds, current_range)

    records, cache_hit = ds.fetch_daily_series_info(params.point, current_range)
    current_season = slice_season(records, spec, params.point)

    ref_seasons = []
    if params.comparison:
        for back in reference_years(params.reference_kind, spec.day_zero):
            ref_zero = shift_years(spec.day_zero, back)
            ref_spec = SeasonSpec(ref_zero, spec.length_days, spec.t_base)
            ref_records = ds.fetch_daily_series(params.point, season_range(ref_spec))
            ref_seasons.append(slice_season(ref_records, ref_spec, params.point))

    attr_models = []
    for attr_id in params.attributes:
        attr = catalog.attribute(attr_id)
        current = derive_attribute(current_season, attr_id, params.gdd_method)

        comparison: ComparisonResult | None = None
        if ref_seasons:
            refs = [derive_attribute(s, attr_id, params.gdd_method) for s in ref_seasons]
            comparison = difference_series(current, reference_series(refs), params.reference_kind)

        stats = None
        sentences: list[str] = []
        try:
            stats = summary_stats(current)
            summary = generate_summary(
                attr, stats, comparison, spec, params.point, low_confidence=current.low_confidence
            )
            sentences = list(summary.sentences)
        except EmptySeries:
            pass

        attr_models.append(
            AttributeSeriesModel(
                attribute=attr.id,
                name=attr.name,
                unit=attr.unit,
                current=list(current.values),
                reference=list(comparison.reference.values) if comparison else None,
                difference=list(comparison.difference.values) if comparison else None,
                stats=StatsModel(
                    min_value=stats.min_value,
                    min_index=stats.min_index,
                    max_value=stats.max_value,
                    max_index=stats.max_index,
                    mean=stats.mean,
                    last_value=stats.last_value,
                    trend=stats.trend.value,
                    slope=stats.slope,
                    valid_count=stats.valid_count,
                ) if stats else None,
                sentences=sentences,
                low_confidence=current.low_confidence,
                gap_days=current.gap_days,
            )
        )

    alerts = [
        AlertModel(
            kind=a.kind.value,
            dates=list(a.dates),
            observed_extreme=a.observed_extreme,
            threshold=a.threshold,
        )
        for a in evaluate_alerts(records, params.alert_config)
    ]

    key = CacheKey.for_request(params.point, current_range, ds.source_id)
    return SeriesResponse(
        latitude=params.point.latitude,
        longitude=params.point.longitude,
        day_zero=spec.day_zero,
        length_days=spec.length_days,
        t_base=spec.t_base,
        gdd_method=params.gdd_method.value,
        comparison=params.comparison,
        reference=ReferenceInfo(
            mode=params.reference_kind.mode,
            year=params.reference_kind.year,
            n_years=params.reference_kind.n_years,
        ) if params.comparison else None,
        attributes=attr_models,
        alerts=alerts,
        provenance=ProvenanceModel(
            source=ds.source_id,
            fetched_at=ds.cache.entry_mtime(key),
            cache_hit=cache_hit,
        ),
    )


def derived_for_chart(model: AttributeSeriesModel):
    """Rebuild core series objects from a response model for chart rendering."""
    current = DerivedSeries(model.attribute, model.unit, tuple(model.current), gap_days=model.gap_days)
    if model.reference is None:
        return current
    reference = DerivedSeries(model.attribute, model.unit, tuple(model.reference))
    return difference_series(current, reference)


def build_report(ds: WeatherDataSource, cfg: ServiceConfig, params: AnalysisParams,
                 generated_at: dt.datetime | None = None) -> bytes:
    """The same analysis rendered as a PDF; deterministic for a pinned timestamp."""
    response = analyze(ds, cfg, params)
    spec = ReportSpec(
        point=params.point,
        season=params.season,
        attributes=params.attributes,
        comparison=params.comparison,
        reference_kind=params.reference_kind,
        generated_at=generated_at or dt.datetime.now(dt.timezone.utc),
    )
    charts = []
    summaries = []
    for model in response.attributes:
        data = derived_for_chart(model)
        charts.append(render_chart(data, ChartStyle(title=model.name)))
        attr = catalog.attribute(model.attribute)
        if model.stats is None:
            raise EmptySeries(f"attribute {model.attribute} has no data to report")
        summaries.append(NlgSummary(attr.id, tuple(model.sentences), model.low_confidence))
    return compose_pdf(spec, charts, summaries)
