"""Vapour-pressure deficit from daily temperature and humidity extremes.

Saturation vapour pressure uses the 0.6108 * exp(17.27*T / (T + 237.3))
form (kPa). Actual vapour pressure pairs each saturation value with the
relative humidity observed at the opposite temperature extreme: humidity
is highest around the daily minimum temperature and lowest around the
maximum.
"""

from __future__ import annotations

import math

from .errors import DomainError

_SVP_SINGULARITY_C = -237.3


def saturation_vp(t: float) -> float:
    """Saturation vapour pressure in kPa at air temperature t (degrees C)."""
    if not math.isfinite(t) or t <= _SVP_SINGULARITY_C:
        raise DomainError(f"temperature must be finite and > {_SVP_SINGULARITY_C}, got {t!r}")
    return 0.6108 * math.exp(17.27 * t / (t + 237.3))


def vpd(t_max: float, t_min: float, rh_at_tmax: float, rh_at_tmin: float) -> float:
    """Daily vapour-pressure deficit in kPa.

    rh_at_tmax is the relative humidity observed at the time of maximum
    temperature (the daily RH minimum); rh_at_tmin is the RH at minimum
    temperature (the daily RH maximum). Both in percent.
    """
    if not (math.isfinite(t_max) and math.isfinite(t_min)):
        raise DomainError("temperatures must be finite")
    if t_max < t_min:
        raise DomainError(f"t_max ({t_max}) < t_min ({t_min})")
    for name, rh in (("rh_at_tmax", rh_at_tmax), ("rh_at_tmin", rh_at_tmin)):
        if not math.isfinite(rh) or not 0.0 <= rh <= 100.0:
            raise DomainError(f"{name} must be within [0, 100], got {rh!r}")
    svp_max = saturation_vp(t_max)
    svp_min = saturation_vp(t_min)
    avg_svp = (svp_max + svp_min) / 2.0
    avp = (svp_min * (rh_at_tmin / 100.0) + svp_max * (rh_at_tmax / 100.0)) / 2.0
    return avg_svp - avp
