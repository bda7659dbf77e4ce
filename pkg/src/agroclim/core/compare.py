"""Season-against-reference comparison: averaging and difference series."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MismatchedSeries
from .season import DerivedSeries


@dataclass(frozen=True)
class ReferenceKind:
    """Either a single past season (year set) or the mean of the last n years."""

    mode: str  # "single_season" | "mean_of_last"
    year: int | None = None
    n_years: int | None = None

    @classmethod
    def single_season(cls, year: int) -> "ReferenceKind":
        return cls(mode="single_season", year=year)

    @classmethod
    def mean_of_last(cls, n_years: int) -> "ReferenceKind":
        return cls(mode="mean_of_last", n_years=n_years)


@dataclass(frozen=True)
class ComparisonResult:
    current: DerivedSeries
    reference: DerivedSeries
    difference: DerivedSeries
    reference_kind: ReferenceKind


def _check_compatible(series: list[DerivedSeries]) -> None:
    first = series[0]
    for s in series[1:]:
        if s.attribute != first.attribute:
            raise MismatchedSeries(f"attribute mismatch: {s.attribute} vs {first.attribute}")
        if s.unit != first.unit:
            raise MismatchedSeries(f"unit mismatch: {s.unit} vs {first.unit}")
        if len(s) != len(first):
            raise MismatchedSeries(f"length mismatch: {len(s)} vs {len(first)}")


def reference_series(seasons: list[DerivedSeries]) -> DerivedSeries:
    """Per-index mean over non-missing values across input seasons."""
    if not seasons:
        raise MismatchedSeries("no seasons given")
    _check_compatible(seasons)
    values = []
    gaps = 0
    for i in range(len(seasons[0])):
        present = [s.values[i] for s in seasons if s.values[i] is not None]
        if present:
            values.append(sum(present) / len(present))
        else:
            values.append(None)
            gaps += 1
    return DerivedSeries(seasons[0].attribute, seasons[0].unit, tuple(values), gap_days=gaps)


def difference_series(current: DerivedSeries, reference: DerivedSeries,
                      kind: ReferenceKind | None = None) -> ComparisonResult:
    """current minus reference, per index; missing where either is missing."""
    _check_compatible([current, reference])
    values = []
    gaps = 0
    for c, r in zip(current.values, reference.values):
        if c is None or r is None:
            values.append(None)
            gaps += 1
        else:
            values.append(c - r)
    diff = DerivedSeries(current.attribute, current.unit, tuple(values), gap_days=gaps)
    return ComparisonResult(
        current=current,
        reference=reference,
        difference=diff,
        reference_kind=kind or ReferenceKind.mean_of_last(5),
    )
