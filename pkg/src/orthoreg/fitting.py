"""Orthogonal-distance (total least squares) fitting of lines and hyperplanes.

A flat is fitted to an n-dimensional point cloud by minimizing the sum of
squared shortest distances from the points to the flat. Both fits go through
the principal axes of the centered scatter matrix: the largest-eigenvalue axis
is the best line direction, the smallest-eigenvalue axis is the best
hyperplane normal. Unlike a classical regression, the result does not depend
on which coordinate is declared "dependent", and it is invariant under rigid
motions of the data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import SymmetricMatrix, eigen_symmetric
from .errors import DegenerateGeometryError, InvalidInputError

#: Residual-aggregate fields of ResidualStats, in reporting order.
ERROR_METRICS = ("sum_sq", "root_sum_sq", "rms", "sum_abs")

#: Aggregate reported as "err" by the higher-level tools: the sum of absolute
#: orthogonal distances. Selected empirically against the reference V4 plane
#: errors; see the economy module.
DEFAULT_ERROR_METRIC = "sum_abs"

#: Relative eigenvalue cutoff below which a principal axis counts as unspread.
RANK_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PointCloud:
    """An ordered list of n-dimensional points with optional string labels.

    ``points`` is coerced to a float array of shape (n_points, dim); labels,
    when given, must match the number of points (e.g. observation years).
    """

    points: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise InvalidInputError("points must be a 2-D array of shape (n, dim)")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise InvalidInputError("point cloud needs at least one point and one dimension")
        if not np.isfinite(pts).all():
            raise InvalidInputError("point coordinates must be finite")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != pts.shape[0]:
                raise InvalidInputError("labels length must match number of points")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    @classmethod
    def from_columns(cls, *columns, labels=None) -> "PointCloud":
        """Assemble a cloud from per-coordinate sequences of equal length."""
        cols = [np.asarray(c, dtype=float) for c in columns]
        if any(c.ndim != 1 for c in cols):
            raise InvalidInputError("columns must be one-dimensional")
        if len({c.shape[0] for c in cols}) > 1:
            raise InvalidInputError("columns must have equal length")
        return cls(np.column_stack(cols), labels=labels)


@dataclass(frozen=True)
class ResidualStats:
    """Orthogonal-distance residual aggregates for a fitted flat."""

    per_point_distance: np.ndarray
    sum_sq: float
    sum_abs: float
    rms: float
    root_sum_sq: float

    @classmethod
    def from_distances(cls, distances) -> "ResidualStats":
        d = np.asarray(distances, dtype=float)
        sum_sq = float(d @ d)
        return cls(
            per_point_distance=d,
            sum_sq=sum_sq,
            sum_abs=float(np.sum(d)),
            rms=float(np.sqrt(sum_sq / d.shape[0])),
            root_sum_sq=float(np.sqrt(sum_sq)),
        )

    def metric(self, name: str) -> float:
        """Value of one named aggregate (see ERROR_METRICS)."""
        if name not in ERROR_METRICS:
            raise InvalidInputError(f"unknown error metric {name!r}")
        return getattr(self, name)


@dataclass(frozen=True)
class FittedLine:
    """A best-fit line: the cloud centroid plus a unit direction."""

    anchor: np.ndarray
    direction: np.ndarray
    error: ResidualStats

    @property
    def dim(self) -> int:
        return self.anchor.shape[0]


@dataclass(frozen=True)
class FittedHyperplane:
    """A best-fit hyperplane ``normal . x + offset = 0`` through the centroid."""

    normal: np.ndarray
    centroid: np.ndarray
    offset: float
    error: ResidualStats

    @property
    def dim(self) -> int:
        return self.normal.shape[0]


def centroid(cloud: PointCloud) -> np.ndarray:
    """Coordinate-wise mean of the cloud. Every fitted flat passes through it."""
    return cloud.points.mean(axis=0)


def scatter_matrix(cloud: PointCloud) -> SymmetricMatrix:
    """Unnormalized centered scatter matrix sum_i (p_i - c)(p_i - c)^T.

    No 1/(n-1) factor: normalization rescales eigenvalues uniformly and does
    not move the principal axes.
    """
    b = cloud.points - centroid(cloud)
    return SymmetricMatrix.from_array(b.T @ b, asymmetry_tol=1e-9)


def _all_points_identical(cloud: PointCloud) -> bool:
    return bool((cloud.points == cloud.points[0]).all())


def fit_line(cloud: PointCloud) -> FittedLine:
    """Fit a line minimizing the sum of squared orthogonal distances.

    The direction is the largest-eigenvalue principal axis of the scatter
    matrix; the anchor is the centroid.

    Raises
    ------
    InvalidInputError
        Fewer than 2 points, or dim < 2.
    DegenerateGeometryError
        All points identical (no direction is distinguished).
    """
    if len(cloud) < 2:
        raise InvalidInputError("line fit needs at least 2 points")
    if cloud.dim < 2:
        raise InvalidInputError("line fit needs dimension >= 2")
    if _all_points_identical(cloud):
        raise DegenerateGeometryError(
            "all points identical: any direction fits equally well",
            flat_dim=0,
            flat_point=cloud.points[0].copy(),
        )
    dec = eigen_symmetric(scatter_matrix(cloud))
    direction = dec.eigenvectors[0]
    anchor = centroid(cloud)
    b = cloud.points - anchor
    residual = b - np.outer(b @ direction, direction)
    distances = np.linalg.norm(residual, axis=1)
    return FittedLine(anchor, direction, ResidualStats.from_distances(distances))


def fit_hyperplane(cloud: PointCloud) -> FittedHyperplane:
    """Fit a hyperplane minimizing the sum of squared orthogonal distances.

    The normal is the smallest-eigenvalue principal axis of the scatter
    matrix, so it is orthogonal to the directions in which the data spreads.

    Raises
    ------
    InvalidInputError
        Fewer than ``dim`` points, or dim < 2.
    DegenerateGeometryError
        The points span a flat of dimension < dim-1, so infinitely many
        hyperplanes contain them; the spanned flat is reported on the error.
    """
    if cloud.dim < 2:
        raise InvalidInputError("hyperplane fit needs dimension >= 2")
    if len(cloud) < cloud.dim:
        raise InvalidInputError(
            f"hyperplane fit in dimension {cloud.dim} needs at least {cloud.dim} points"
        )
    dec = eigen_symmetric(scatter_matrix(cloud))
    values = dec.eigenvalues
    cutoff = values[0] * RANK_TOLERANCE
    rank = int(np.sum(values > cutoff)) if values[0] > 0.0 else 0
    if rank < cloud.dim - 1:
        c = centroid(cloud)
        raise DegenerateGeometryError(
            f"points span only a {rank}-dimensional flat; "
            f"a hyperplane in dimension {cloud.dim} is not unique",
            flat_dim=rank,
            flat_point=c,
            flat_basis=dec.eigenvectors[:rank].copy(),
        )
    normal = dec.eigenvectors[-1]
    c = centroid(cloud)
    offset = -float(normal @ c)
    distances = np.abs((cloud.points - c) @ normal)
    return FittedHyperplane(normal, c, offset, ResidualStats.from_distances(distances))


def _check_dim(p: np.ndarray, expected: int, what: str) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (expected,):
        raise InvalidInputError(f"{what}: expected a vector of dimension {expected}")
    if not np.isfinite(p).all():
        raise InvalidInputError(f"{what}: coordinates must be finite")
    return p


def distance_point_to_line(p, line: FittedLine) -> float:
    """Shortest (perpendicular) distance from a point to a fitted line."""
    p = _check_dim(p, line.dim, "distance_point_to_line")
    r = p - line.anchor
    return float(np.linalg.norm(r - (r @ line.direction) * line.direction))


def distance_point_to_plane(p, plane: FittedHyperplane) -> float:
    """Shortest distance from a point to a fitted hyperplane: |normal.p + offset|."""
    p = _check_dim(p, plane.dim, "distance_point_to_plane")
    return float(abs(plane.normal @ p + plane.offset))


def total_orthogonal_error(cloud: PointCloud, model) -> ResidualStats:
    """Residual aggregates of a cloud against a fitted line or hyperplane.

    This is the quantity the fits minimize (in its sum-of-squares form), so
    for the model fitted to ``cloud`` it reproduces ``model.error``.
    """
    if isinstance(model, FittedLine):
        if cloud.dim != model.dim:
            raise InvalidInputError("cloud and line dimensions differ")
        b = cloud.points - model.anchor
        residual = b - np.outer(b @ model.direction, model.direction)
        distances = np.linalg.norm(residual, axis=1)
    elif isinstance(model, FittedHyperplane):
        if cloud.dim != model.dim:
            raise InvalidInputError("cloud and hyperplane dimensions differ")
        distances = np.abs(cloud.points @ model.normal + model.offset)
    else:
        raise InvalidInputError("model must be a FittedLine or FittedHyperplane")
    return ResidualStats.from_distances(distances)


__all__ = [
    "ERROR_METRICS",
    "DEFAULT_ERROR_METRIC",
    "PointCloud",
    "ResidualStats",
    "FittedLine",
    "FittedHyperplane",
    "centroid",
    "scatter_matrix",
    "fit_line",
    "fit_hyperplane",
    "distance_point_to_line",
    "distance_point_to_plane",
    "total_orthogonal_error",
]
