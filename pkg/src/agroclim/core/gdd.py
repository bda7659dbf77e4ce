"""Growing-degree-day arithmetic.

Two clamping conventions exist for days whose mean temperature falls below
the base temperature: either the final result is floored at zero, or the
individual temperature components are raised to the base before averaging.
Both are provided; CLAMP_RESULT is the default.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError


class GddMethod(enum.Enum):
    CLAMP_RESULT = "clamp_result"
    CLAMP_COMPONENTS = "clamp_components"


DEFAULT_METHOD = GddMethod.CLAMP_RESULT


def daily_gdd(t_max: float, t_min: float, t_base: float, method: GddMethod = DEFAULT_METHOD) -> float:
    """Degree-days accumulated on a single day; never negative."""
    for name, v in (("t_max", t_max), ("t_min", t_min), ("t_base", t_base)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")
    if t_max < t_min:
        raise DomainError(f"t_max ({t_max}) < t_min ({t_min})")
    if method is GddMethod.CLAMP_RESULT:
        return max(0.0, (t_max + t_min) / 2.0 - t_base)
    return (max(t_max, t_base) + max(t_min, t_base)) / 2.0 - t_base
