"""The chart attribute catalog: ids, display names and units.

Raw attributes map one-to-one onto daily record fields; computed ones are
evaluated by the core derivation routines. The default catalog has 18
entries and can be narrowed (but not extended) through service
configuration.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Attribute:
    id: str
    name: str
    unit: str
    source_field: str | None = None  # set for raw pass-through attributes


_CATALOG: tuple[Attribute, ...] = (
    Attribute("T_MAX", "Maximum temperature", "°C", "t_max"),
    Attribute("T_MIN", "Minimum temperature", "°C", "t_min"),
    Attribute("T_MEAN", "Mean temperature", "°C"),
    Attribute("DIURNAL_RANGE", "Diurnal temperature range", "°C"),
    Attribute("RAIN", "Rainfall", "mm", "rain"),
    Attribute("RAIN_CUMULATIVE", "Cumulative rainfall", "mm"),
    Attribute("EVAPORATION", "Pan evaporation", "mm", "evaporation"),
    Attribute("RADIATION", "Solar radiation", "MJ/m²", "radiation"),
    Attribute("RH_AT_TMAX", "Relative humidity at max temperature", "%", "rh_at_tmax"),
    Attribute("RH_AT_TMIN", "Relative humidity at min temperature", "%", "rh_at_tmin"),
    Attribute("VAPOUR_PRESSURE", "Vapour pressure", "hPa", "vapour_pressure"),
    Attribute("MSLP", "Mean sea-level pressure", "hPa", "mslp"),
    Attribute("ET_SHORT_CROP", "Evapotranspiration (short crop)", "mm", "et_short_crop"),
    Attribute("ET_TALL_CROP", "Evapotranspiration (tall crop)", "mm", "et_tall_crop"),
    Attribute("GDD_DAILY", "Growing degree days", "°C·day"),
    Attribute("GDD_CUMULATIVE", "Cumulative growing degree days", "°C·day"),
    Attribute("VPD", "Vapour-pressure deficit", "kPa"),
    Attribute("FROST_DAYS_CUMULATIVE", "Cumulative frost days", "days"),
)

CATALOG: dict[str, Attribute] = {a.id: a for a in _CATALOG}

# t_min below this counts as a frost day
FROST_THRESHOLD_C = 2.0


def attribute(attr_id: str) -> Attribute:
    from .core.errors import UnknownAttribute

    try:
        return CATALOG[attr_id]
    except KeyError:
        raise UnknownAttribute(attr_id) from None


def default_ids() -> list[str]:
    return [a.id for a in _CATALOG]
