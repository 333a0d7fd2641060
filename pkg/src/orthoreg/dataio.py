"""CSV ingestion and emission.

Input files are delimiter-separated values with a required header row,
"." as the decimal separator, UTF-8 encoded. Floats are written with
``repr``, which round-trips exactly.
"""

from __future__ import annotations

import csv
import io
import math

from .economy import IndicatorSeries
from .errors import InvalidInputError, ParseError, SchemaError
from .fitting import PointCloud

INDICATOR_FIELDS = ("country", "year", "unemployment", "gdp_change", "inflation")


def _text_rows(source, delimiter: str):
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    if isinstance(source, str):
        source = io.StringIO(source)
    rows = [row for row in csv.reader(source, delimiter=delimiter) if row]
    return rows


def _resolve_column(name_or_index, header: list[str]) -> int:
    """Column lookup: header name first, integer position as fallback."""
    text = str(name_or_index).strip()
    if text in header:
        return header.index(text)
    if isinstance(name_or_index, int) or text.lstrip("-").isdigit():
        idx = int(text)
        if 0 <= idx < len(header):
            return idx
    raise SchemaError(f"column {text!r} not found (header: {', '.join(header)})")


def _cell_float(row, idx: int, row_number: int, name: str) -> float:
    if idx >= len(row):
        raise ParseError(f"row {row_number}: missing value for column {name!r}")
    cell = row[idx].strip()
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(
            f"row {row_number}, column {name!r}: not a number: {cell!r}"
        ) from None
    if not math.isfinite(value):
        raise ParseError(f"row {row_number}, column {name!r}: non-finite value {cell!r}")
    return value


def parse_cloud_csv(source, columns=None, label_column=None, delimiter: str = ",") -> PointCloud:
    """Read a point cloud from CSV text, bytes, or a text file object.

    ``columns`` selects and orders the coordinate columns by header name or
    0-based index; None takes every column except the label column. Any
    non-numeric selected cell aborts the parse with the offending row and
    column named.
    """
    rows = _text_rows(source, delimiter)
    if not rows:
        raise InvalidInputError("empty input: a header row is required")
    header = [h.strip() for h in rows[0]]
    data = rows[1:]
    if not data:
        raise InvalidInputError("no data rows after the header")

    label_idx = None
    if label_column is not None:
        label_idx = _resolve_column(label_column, header)

    if columns is None:
        indices = [i for i in range(len(header)) if i != label_idx]
        names = [header[i] for i in indices]
    else:
        indices = [_resolve_column(c, header) for c in columns]
        names = [header[i] for i in indices]
    if not indices:
        raise InvalidInputError("no coordinate columns selected")

    points = []
    labels = [] if label_idx is not None else None
    for offset, row in enumerate(data):
        row_number = offset + 2  # header is row 1
        points.append(
            [_cell_float(row, idx, row_number, name) for idx, name in zip(indices, names)]
        )
        if label_idx is not None:
            if label_idx >= len(row):
                raise ParseError(
                    f"row {row_number}: missing value for column {header[label_idx]!r}"
                )
            labels.append(row[label_idx].strip())
    return PointCloud(points, labels=tuple(labels) if labels is not None else None)


def format_cloud_csv(cloud: PointCloud, column_names, label_name=None) -> str:
    """Write a cloud as CSV with full-precision floats."""
    column_names = list(column_names)
    if len(column_names) != cloud.dim:
        raise InvalidInputError("one column name per coordinate is required")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if label_name is not None:
        writer.writerow([label_name, *column_names])
        labels = cloud.labels or tuple(str(i) for i in range(len(cloud)))
        for label, point in zip(labels, cloud.points):
            writer.writerow([label, *[repr(float(v)) for v in point]])
    else:
        writer.writerow(column_names)
        for point in cloud.points:
            writer.writerow([repr(float(v)) for v in point])
    return out.getvalue()


def format_indicator_csv(series_list) -> str:
    """Write indicator series in the long table schema INDICATOR_FIELDS."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(INDICATOR_FIELDS)
    for s in series_list:
        for year, u, g, i in zip(s.years, s.unemployment, s.gdp_change, s.inflation):
            writer.writerow([s.country, year, repr(float(u)), repr(float(g)), repr(float(i))])
    return out.getvalue()


def parse_indicator_csv(source, delimiter: str = ",") -> list[IndicatorSeries]:
    """Read indicator series from the long table schema INDICATOR_FIELDS.

    Rows are grouped by country in order of first appearance; within a
    country, years must already be strictly increasing.
    """
    rows = _text_rows(source, delimiter)
    if not rows:
        raise InvalidInputError("empty input: a header row is required")
    header = [h.strip() for h in rows[0]]
    indices = {name: _resolve_column(name, header) for name in INDICATOR_FIELDS}
    data = rows[1:]
    if not data:
        raise InvalidInputError("no data rows after the header")

    order: list[str] = []
    grouped: dict[str, list[tuple[int, float, float, float]]] = {}
    for offset, row in enumerate(data):
        row_number = offset + 2
        if indices["country"] >= len(row):
            raise ParseError(f"row {row_number}: missing value for column 'country'")
        country = row[indices["country"]].strip()
        if not country:
            raise ParseError(f"row {row_number}: empty country code")
        year_value = _cell_float(row, indices["year"], row_number, "year")
        if year_value != int(year_value):
            raise ParseError(f"row {row_number}, column 'year': not an integer")
        record = (
            int(year_value),
            _cell_float(row, indices["unemployment"], row_number, "unemployment"),
            _cell_float(row, indices["gdp_change"], row_number, "gdp_change"),
            _cell_float(row, indices["inflation"], row_number, "inflation"),
        )
        if country not in grouped:
            order.append(country)
            grouped[country] = []
        grouped[country].append(record)

    series = []
    for country in order:
        records = grouped[country]
        series.append(
            IndicatorSeries(
                country=country,
                years=tuple(r[0] for r in records),
                unemployment=tuple(r[1] for r in records),
                gdp_change=tuple(r[2] for r in records),
                inflation=tuple(r[3] for r in records),
            )
        )
    return series


__all__ = [
    "INDICATOR_FIELDS",
    "parse_cloud_csv",
    "format_cloud_csv",
    "format_indicator_csv",
    "parse_indicator_csv",
]
