"""Command-line interface.

Subcommands
-----------
fit            Fit a line or plane to CSV data (or the builtin V4 dataset).
compare        Classical vs conjugate vs orthogonal line on 2D data.
economy        Plane-based indicators for the builtin or external economies.
gen-bumblebee  Write a deterministic noisy-line cloud as CSV.

Exit codes: 0 success, 2 usage errors, 3 parse/schema/invalid-input errors,
4 degenerate geometry, 5 numerical failure. Reports go to stdout; plot and
scene files go to --output-dir (or $ORTHOREG_OUTPUT_DIR, default "."), with
their paths announced on stderr so stdout stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .dataio import (
    format_cloud_csv,
    format_indicator_csv,
    parse_cloud_csv,
    parse_indicator_csv,
)
from .economy import (
    STATE_VARIABLES,
    V4_REPORT_ORDER,
    economy_indicators,
    trajectory,
    v4_dataset,
)
from .errors import (
    DegenerateGeometryError,
    InvalidInputError,
    NumericalFailureError,
    ParseError,
    SchemaError,
    UsageError,
)
from .fitting import (
    ERROR_METRICS,
    DEFAULT_ERROR_METRIC,
    FittedHyperplane,
    FittedLine,
    PointCloud,
    fit_hyperplane,
    fit_line,
)
from .regression import ComparisonReport, compare_ols_tls
from .report import (
    FitReport,
    FitRequest,
    build_fit_report,
    render_compare,
    render_economy,
    render_fit,
    scene_dict,
)
from .svg import polyline_chart, scatter_chart
from .synthetic import LineCloudSpec, generate_line_cloud

BUILTIN_V4 = "builtin:v4"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DEGENERATE = 4
EXIT_NUMERICAL = 5

OUTPUT_DIR_ENV = "ORTHOREG_OUTPUT_DIR"


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _builtin_series(country: str | None):
    if country is None:
        raise UsageError(f"{BUILTIN_V4} requires --country (one of CZ, HU, PL, SK)")
    for series in v4_dataset():
        if series.country == country.upper():
            return series
    raise UsageError(f"unknown country {country!r} (expected CZ, HU, PL, SK)")


def _load_cloud(req: FitRequest):
    """Returns (cloud, provenance metadata)."""
    if req.input == BUILTIN_V4:
        series = _builtin_series(req.country)
        cloud = trajectory(series)
        meta = {
            "input": BUILTIN_V4,
            "country": series.country,
            "columns": list(STATE_VARIABLES),
        }
        return cloud, meta
    text = _read_text(req.input)
    cloud = parse_cloud_csv(
        text, columns=req.columns, label_column=req.label_column, delimiter=req.delimiter
    )
    meta = {
        "input": req.input,
        "columns": list(req.columns) if req.columns is not None else None,
    }
    return cloud, meta


def run_fit(req: FitRequest) -> FitReport:
    """Fit per the request and wrap the result in a report."""
    if req.geometry not in ("line", "plane"):
        raise UsageError(f"unknown geometry {req.geometry!r} (expected line or plane)")
    if req.error_metric not in ERROR_METRICS:
        raise UsageError(
            f"unknown error metric {req.error_metric!r} (expected one of {', '.join(ERROR_METRICS)})"
        )
    cloud, meta = _load_cloud(req)
    model = fit_line(cloud) if req.geometry == "line" else fit_hyperplane(cloud)
    meta["geometry"] = req.geometry
    return build_fit_report(cloud, model, req.error_metric, meta)


def emit_plot_svg(report, projection: tuple[int, int] | None = None) -> str:
    """Scatter plot of a fit or comparison report as an SVG string.

    2D reports plot directly; higher-dimensional reports need a projection
    (pair of coordinate indices). In a projection only a fitted line is drawn
    (a projected hyperplane fills the view); in 2D a fitted "plane" is itself
    a line and is drawn.
    """
    if isinstance(report, ComparisonReport):
        if report.cloud is None:
            raise InvalidInputError("comparison report carries no data points to plot")
        lines = []
        c = report.centroid
        if report.ols is not None:
            lines.append(("classical y(x)", c, report.ols.direction()))
        if report.conjugate is not None:
            lines.append(("conjugate x(y)", c, report.conjugate.direction()))
        lines.append(("orthogonal", report.tls.anchor, report.tls.direction))
        return scatter_chart(
            report.cloud.points, lines, title="classical vs orthogonal regression",
            x_label="x", y_label="y",
        )

    if not isinstance(report, FitReport):
        raise InvalidInputError("expected a FitReport or ComparisonReport")
    if report.cloud is None:
        raise InvalidInputError("fit report carries no data points to plot")
    cloud = report.cloud
    model = report.model
    if cloud.dim == 2:
        points = cloud.points
        axes = (0, 1)
    else:
        if projection is None:
            raise InvalidInputError(
                f"data is {cloud.dim}-dimensional: a 2D projection (i,j) is required"
            )
        i, j = projection
        if not (0 <= i < cloud.dim and 0 <= j < cloud.dim and i != j):
            raise InvalidInputError(f"invalid projection {projection!r} for dim {cloud.dim}")
        points = cloud.points[:, [i, j]]
        axes = (i, j)

    lines = []
    if isinstance(model, FittedLine):
        direction = model.direction[list(axes)]
        if float(np.linalg.norm(direction)) > 1e-12:
            lines.append(("fit", model.anchor[list(axes)], direction))
    elif isinstance(model, FittedHyperplane) and cloud.dim == 2:
        n = model.normal
        lines.append(("fit", model.centroid, np.array([-n[1], n[0]])))
    columns = report.metadata.get("columns") or [f"x{k}" for k in range(cloud.dim)]
    return scatter_chart(
        points, lines, title=f"orthogonal {report.metadata.get('geometry', 'fit')}",
        x_label=str(columns[axes[0]]), y_label=str(columns[axes[1]]),
    )


def _output_dir(args) -> Path:
    chosen = args.output_dir or os.environ.get(OUTPUT_DIR_ENV) or "."
    path = Path(chosen)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_file(directory: Path, name: str, content: str) -> None:
    target = directory / name
    target.write_text(content, encoding="utf-8")
    print(f"wrote {target}", file=sys.stderr)


def _columns_arg(text: str | None):
    if text is None:
        return None
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    if not parts:
        raise argparse.ArgumentTypeError("empty column list")
    return parts


def _projection_arg(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("projection must be two indices i,j")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("projection indices must be integers") from None


def _vec3_arg(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated coordinates")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise argparse.ArgumentTypeError("coordinates must be numbers") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoreg",
        description="Orthogonal-distance (total least squares) fitting of lines and planes.",
        epilog=(
            "exit codes: 0 ok, 2 usage, 3 parse/schema/invalid input, "
            "4 degenerate geometry, 5 numerical failure"
        ),
    )
    parser.add_argument("--version", action="version", version=f"orthoreg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common_out = argparse.ArgumentParser(add_help=False)
    common_out.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", dest="output_format"
    )
    common_out.add_argument("--plot", action="store_true", help="also write an SVG plot")
    common_out.add_argument(
        "--output-dir", default=None,
        help=f"directory for plot/scene files (default ${OUTPUT_DIR_ENV} or .)",
    )

    p_fit = sub.add_parser(
        "fit", parents=[common_out], help="fit a line or plane to a point cloud"
    )
    p_fit.add_argument("--input", required=True, help=f"CSV path or {BUILTIN_V4}")
    p_fit.add_argument("--geometry", choices=("line", "plane"), required=True)
    p_fit.add_argument("--country", default=None, help=f"country code with {BUILTIN_V4}")
    p_fit.add_argument(
        "--columns", type=_columns_arg, default=None,
        help="comma-separated coordinate columns (names or indices)",
    )
    p_fit.add_argument("--label-column", default=None)
    p_fit.add_argument("--delimiter", default=",")
    p_fit.add_argument(
        "--error-metric", choices=ERROR_METRICS, default=DEFAULT_ERROR_METRIC
    )
    p_fit.add_argument(
        "--projection", type=_projection_arg, default=None,
        help="coordinate pair i,j to project onto when plotting 3D data",
    )

    p_cmp = sub.add_parser(
        "compare", parents=[common_out],
        help="classical, conjugate, and orthogonal lines on 2D data",
    )
    p_cmp.add_argument("--input", required=True, help="CSV path with 2D data")
    p_cmp.add_argument(
        "--columns", type=_columns_arg, default=None,
        help="the two coordinate columns (default: first two non-label columns)",
    )
    p_cmp.add_argument("--label-column", default=None)
    p_cmp.add_argument("--delimiter", default=",")

    p_eco = sub.add_parser(
        "economy", parents=[common_out],
        help="plane-based economy indicators (builtin V4 data by default)",
    )
    p_eco.add_argument(
        "--data", default=None,
        help="external indicator CSV (schema: country,year,unemployment,gdp_change,inflation)",
    )
    p_eco.add_argument(
        "--error-metric", choices=ERROR_METRICS, default=DEFAULT_ERROR_METRIC
    )
    p_eco.add_argument(
        "--dump-data", action="store_true",
        help="write the indicator dataset as CSV to stdout and exit",
    )

    p_gen = sub.add_parser(
        "gen-bumblebee", help="generate a deterministic noisy line cloud as CSV"
    )
    p_gen.add_argument("--start", type=_vec3_arg, required=True, help="x,y,z of the segment start")
    p_gen.add_argument("--end", type=_vec3_arg, required=True, help="x,y,z of the segment end")
    p_gen.add_argument("--n", type=int, required=True, help="number of sample points")
    p_gen.add_argument("--sigma", type=float, default=0.0, help="noise standard deviation")
    p_gen.add_argument("--seed", type=int, default=0, help="64-bit generator seed")
    p_gen.add_argument("--output", default=None, help="CSV file (default: stdout)")
    return parser


def _cmd_fit(args) -> int:
    req = FitRequest(
        input=args.input,
        geometry=args.geometry,
        columns=args.columns,
        label_column=args.label_column,
        output_format=args.output_format,
        emit_plot=args.plot,
        error_metric=args.error_metric,
        country=args.country,
        projection=args.projection,
        delimiter=args.delimiter,
    )
    report = run_fit(req)
    sys.stdout.write(render_fit(report, req.output_format))
    if req.emit_plot:
        svg = emit_plot_svg(report, projection=req.projection)
        _write_file(_output_dir(args), f"fit_{req.geometry}.svg", svg)
    return EXIT_OK


def run_compare(source_text: str, columns=None, label_column=None, delimiter=","):
    """Parse 2D data and produce the three-line comparison report."""
    cloud = parse_cloud_csv(
        source_text, columns=columns, label_column=label_column, delimiter=delimiter
    )
    if cloud.dim != 2:
        raise InvalidInputError(
            f"comparison needs exactly 2 coordinate columns, got {cloud.dim}"
        )
    return compare_ols_tls(cloud.points[:, 0], cloud.points[:, 1])


def _cmd_compare(args) -> int:
    text = _read_text(args.input)
    columns = args.columns
    if columns is not None and len(columns) != 2:
        raise UsageError("compare needs exactly two columns")
    report = run_compare(
        text, columns=columns, label_column=args.label_column, delimiter=args.delimiter
    )
    sys.stdout.write(render_compare(report, {"input": args.input}, args.output_format))
    if args.plot:
        _write_file(_output_dir(args), "compare.svg", emit_plot_svg(report))
    return EXIT_OK


def run_economy(series_list=None, metric: str = DEFAULT_ERROR_METRIC):
    """Indicators for the given series (default: builtin data in report order)."""
    if series_list is None:
        by_code = {s.country: s for s in v4_dataset()}
        series_list = [by_code[c] for c in V4_REPORT_ORDER]
    return economy_indicators(series_list, metric=metric)


def _cmd_economy(args) -> int:
    if args.data is not None:
        series_list = parse_indicator_csv(_read_text(args.data))
        provenance = args.data
    else:
        series_list = None
        provenance = BUILTIN_V4
    if args.dump_data:
        dump = series_list
        if dump is None:
            dump = v4_dataset()
        sys.stdout.write(format_indicator_csv(dump))
        return EXIT_OK
    indicators = run_economy(series_list, metric=args.error_metric)
    sys.stdout.write(
        render_economy(
            indicators, {"input": provenance, "metric": args.error_metric}, args.output_format
        )
    )
    if args.plot:
        out = _output_dir(args)
        used = series_list
        if used is None:
            by_code = {s.country: s for s in v4_dataset()}
            used = [by_code[c] for c in V4_REPORT_ORDER]
        years = used[0].years
        for variable in STATE_VARIABLES:
            chart = polyline_chart(
                years,
                [(s.country, getattr(s, variable)) for s in used],
                title=f"{variable} by year",
                x_label="year",
                y_label=f"{variable} (%)",
            )
            _write_file(out, f"economy_{variable}.svg", chart)
        for series, plane in zip(used, indicators.planes):
            scene = scene_dict(plane, trajectory(series))
            _write_file(
                out, f"scene_{plane.country}.json", json.dumps(scene, indent=2) + "\n"
            )
    return EXIT_OK


def _cmd_gen_bumblebee(args) -> int:
    spec = LineCloudSpec(
        start=args.start, end=args.end, n=args.n, sigma=args.sigma, seed=args.seed
    )
    sample = generate_line_cloud(spec)
    labeled = PointCloud(
        sample.cloud.points, labels=tuple(str(i) for i in range(args.n))
    )
    csv_text = format_cloud_csv(labeled, ("x", "y", "z"), label_name="i")
    if args.output is None:
        sys.stdout.write(csv_text)
    else:
        Path(args.output).write_text(csv_text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "fit": _cmd_fit,
    "compare": _cmd_compare,
    "economy": _cmd_economy,
    "gen-bumblebee": _cmd_gen_bumblebee,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaError, ParseError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateGeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NumericalFailureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
