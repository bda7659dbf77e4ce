"""CSV handling for upstream responses and the local cache dialect.

Upstream columns are matched by header name against a table of known
aliases (covering the SILO gridded-data names and our canonical names);
unknown columns are ignored. The cache dialect is our canonical header
plus a parallel q_<field> quality column per value field.
"""

from __future__ import annotations

import csv
import datetime as dt
import io

from .types import QUALITY_MISSING, VALUE_FIELDS, DailyRecord, ParseError

DATE_ALIASES = ("date", "yyyy-mm-dd", "yyyymmdd")

FIELD_ALIASES: dict[str, tuple[str, ...]] = {
    "t_max": ("t_max", "max_temp", "tmax"),
    "t_min": ("t_min", "min_temp", "tmin"),
    "rain": ("rain", "daily_rain"),
    "evaporation": ("evaporation", "evap_pan"),
    "radiation": ("radiation",),
    "rh_at_tmax": ("rh_at_tmax", "rh_tmax"),
    "rh_at_tmin": ("rh_at_tmin", "rh_tmin"),
    "vapour_pressure": ("vapour_pressure", "vp"),
    "mslp": ("mslp", "mslp_pres"),
    "et_short_crop": ("et_short_crop",),
    "et_tall_crop": ("et_tall_crop",),
}

# quality columns: upstream appends _source to the data column name
_MISSING_SENTINELS = {"", "na", "nan", "null", "-999", "-999.0", "-9999"}


def _parse_date(token: str, line: int) -> dt.date:
    token = token.strip()
    for fmt in ("%Y-%m-%d", "%Y%m%d"):
        try:
            return dt.datetime.strptime(token, fmt).date()
        except ValueError:
            continue
    raise ParseError(f"unparsable date {token!r}", line=line, column="date")


def _parse_value(token: str, line: int, column: str) -> float | None:
    token = token.strip()
    if token.lower() in _MISSING_SENTINELS:
        return None
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"unparsable value {token!r}", line=line, column=column) from None


def parse_daily_csv(text: str) -> list[DailyRecord]:
    """Parse an upstream CSV body into daily records, in file order."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty CSV: no header row", line=0) from None
    names = [h.strip().lower() for h in header]

    date_idx = next((i for i, n in enumerate(names) if n in DATE_ALIASES), None)
    if date_idx is None:
        raise ParseError("no date column in header", line=1, column="date")

    field_idx: dict[str, int] = {}
    quality_idx: dict[str, int] = {}
    for fld, aliases in FIELD_ALIASES.items():
        for i, n in enumerate(names):
            if n in aliases:
                field_idx[fld] = i
            elif n.endswith("_source") and n[: -len("_source")] in aliases:
                quality_idx[fld] = i

    records = []
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        date = _parse_date(row[date_idx], line_no)
        values: dict[str, float | None] = {}
        quality: dict[str, str] = {}
        for fld, i in field_idx.items():
            token = row[i] if i < len(row) else ""
            values[fld] = _parse_value(token, line_no, header[i].strip())
            if values[fld] is None:
                quality[fld] = QUALITY_MISSING
        for fld, i in quality_idx.items():
            if i < len(row) and row[i].strip() and values.get(fld) is not None:
                quality[fld] = row[i].strip()
        records.append(DailyRecord(date=date, quality=quality, **values))
    return records


CACHE_HEADER = ["date", *VALUE_FIELDS, *(f"q_{f}" for f in VALUE_FIELDS)]


def write_cache_csv(records: list[DailyRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CACHE_HEADER)
    for rec in records:
        row = [rec.date.isoformat()]
        row += ["" if rec.value(f) is None else repr(rec.value(f)) for f in VALUE_FIELDS]
        row += [rec.quality.get(f, "") for f in VALUE_FIELDS]
        writer.writerow(row)
    return out.getvalue()


def read_cache_csv(text: str) -> list[DailyRecord]:
    reader = csv.DictReader(io.StringIO(text))
    records = []
    for line_no, row in enumerate(reader, start=2):
        values = {
            f: None if row[f] == "" else _parse_value(row[f], line_no, f) for f in VALUE_FIELDS
        }
        quality = {f: row[f"q_{f}"] for f in VALUE_FIELDS if row.get(f"q_{f}")}
        records.append(DailyRecord(date=_parse_date(row["date"], line_no), quality=quality, **values))
    return records
