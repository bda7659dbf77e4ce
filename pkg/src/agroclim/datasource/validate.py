"""Record-level invariant checks; violations demote values to missing."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .types import QUALITY_MISSING, DailyRecord


@dataclass(frozen=True)
class Violation:
    date: object
    field: str
    message: str


_NON_NEGATIVE = ("rain", "evaporation", "radiation")
_PERCENT = ("rh_at_tmax", "rh_at_tmin")


def validate_records(records: list[DailyRecord]) -> tuple[list[DailyRecord], list[Violation]]:
    """Check every record invariant; offending values become missing."""
    out = []
    violations: list[Violation] = []
    for rec in records:
        demote: set[str] = set()

        if rec.t_max is not None and rec.t_min is not None and rec.t_max < rec.t_min:
            violations.append(Violation(rec.date, "t_max", f"t_max {rec.t_max} < t_min {rec.t_min}"))
            demote.update(("t_max", "t_min"))
        for fld in _PERCENT:
            v = rec.value(fld)
            if v is not None and not 0.0 <= v <= 100.0:
                violations.append(Violation(rec.date, fld, f"{fld} {v} outside [0, 100]"))
                demote.add(fld)
        for fld in _NON_NEGATIVE:
            v = rec.value(fld)
            if v is not None and v < 0.0:
                violations.append(Violation(rec.date, fld, f"{fld} {v} negative"))
                demote.add(fld)

        if demote:
            quality = dict(rec.quality)
            quality.update({f: QUALITY_MISSING for f in demote})
            rec = dataclasses.replace(rec, quality=quality, **{f: None for f in demote})
        out.append(rec)
    return out, violations
