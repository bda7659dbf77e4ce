"""Temperature-threshold alerts over a trailing window of recent days.

The window is anchored to the most recent record that carries any
temperature, not to wall-clock today, because the data source publishes
with a lag. Comparisons are strict: a value exactly at the threshold does
not alert.
"""

from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass

from .datasource.types import DailyRecord

DEFAULT_WINDOW_DAYS = 9


class AlertKind(enum.Enum):
    BELOW_MIN = "below_min"
    ABOVE_MAX = "above_max"


@dataclass(frozen=True)
class AlertConfig:
    min_threshold: float | None = None
    max_threshold: float | None = None
    enabled: bool = True
    window_days: int = DEFAULT_WINDOW_DAYS

    def __post_init__(self):
        if self.window_days < 1:
            raise ValueError(f"window_days must be >= 1, got {self.window_days}")
        if (
            self.min_threshold is not None
            and self.max_threshold is not None
            and not self.min_threshold < self.max_threshold
        ):
            raise ValueError(
                f"min_threshold ({self.min_threshold}) must be below "
                f"max_threshold ({self.max_threshold})"
            )


@dataclass(frozen=True)
class Alert:
    kind: AlertKind
    dates: tuple[dt.date, ...]
    observed_extreme: float
    threshold: float


def evaluate_alerts(records: list[DailyRecord], config: AlertConfig) -> list[Alert]:
    """At most one alert per kind, aggregating all offending dates."""
    if not config.enabled:
        return []
    usable = [r for r in records if r.t_max is not None or r.t_min is not None]
    if not usable:
        return []
    window = usable[-config.window_days:]

    alerts: list[Alert] = []
    if config.min_threshold is not None:
        offending = [r for r in window if r.t_min is not None and r.t_min < config.min_threshold]
        if offending:
            alerts.append(
                Alert(
                    kind=AlertKind.BELOW_MIN,
                    dates=tuple(r.date for r in offending),
                    observed_extreme=min(r.t_min for r in offending),
                    threshold=config.min_threshold,
                )
            )
    if config.max_threshold is not None:
        offending = [r for r in window if r.t_max is not None and r.t_max > config.max_threshold]
        if offending:
            alerts.append(
                Alert(
                    kind=AlertKind.ABOVE_MAX,
                    dates=tuple(r.date for r in offending),
                    observed_extreme=max(r.t_max for r in offending),
                    threshold=config.max_threshold,
                )
            )
    return alerts
