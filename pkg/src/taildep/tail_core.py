"""Geometry and bookkeeping for heavy-tail data.

L1-polar transforms, the scaled distance to an angular cone, order
statistics with concomitants, and time-series preparation helpers.
All functions here are pure; the container types are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np


class PolarPoint(NamedTuple):
    """L1-polar coordinates: radius r = x + y, angle theta = x / (x + y)."""

    r: float
    theta: float

    def to_cartesian(self) -> tuple[float, float]:
        return (self.r * self.theta, self.r * (1.0 - self.theta))


@dataclass(frozen=True)
class AngularCone:
    """Closed angular interval [a, b] in [0, 1].

    Encodes the first-quadrant cone of points whose angle x/(x+y) lies
    in [a, b]. A degenerate cone a == b is the single ray through the
    angle theta0 = a.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.a <= self.b <= 1.0):
            raise ValueError(f"cone requires 0 <= a <= b <= 1, got [{self.a}, {self.b}]")

    @property
    def is_ray(self) -> bool:
        return self.a == self.b

    @property
    def is_full(self) -> bool:
        return self.a == 0.0 and self.b == 1.0

    def contains_angle(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return (theta >= self.a) & (theta <= self.b)


class BivariateSample:
    """Nonnegative data pairs (X_i, Y_i), stored as parallel arrays."""

    __slots__ = ("x", "y")

    def __init__(self, x, y) -> None:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or y.ndim != 1 or x.size != y.size:
            raise ValueError("x and y must be 1-d arrays of equal length")
        if x.size < 1:
            raise ValueError("sample must contain at least one point")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValueError("sample contains non-finite values")
        if np.any(x < 0) or np.any(y < 0):
            raise ValueError("sample contains negative values")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("BivariateSample is immutable")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "BivariateSample":
        arr = np.asarray(list(pairs), dtype=float).reshape(-1, 2)
        return cls(arr[:, 0], arr[:, 1])

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def radii(self) -> np.ndarray:
        return self.x + self.y

    @property
    def angles(self) -> np.ndarray:
        """Angles x/(x+y); points at the origin get angle 0 (they never
        enter any top-k computation)."""
        r = self.radii
        with np.errstate(invalid="ignore", divide="ignore"):
            theta = np.where(r > 0, self.x / np.where(r > 0, r, 1.0), 0.0)
        return theta

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariateSample)
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
        )


@dataclass(frozen=True)
class RadialOrder:
    """The sample sorted by decreasing radius, with concomitants.

    sorted_r[i] is the (i+1)-th largest radius; theta and (x, y) carry
    the concomitant angle and pair of that order statistic. Ties in r
    keep the original sample order (stable sort).
    """

    sorted_r: np.ndarray
    theta: np.ndarray
    x: np.ndarray
    y: np.ndarray

    @property
    def n(self) -> int:
        return int(self.sorted_r.size)


def l1_polar(p: tuple[float, float]) -> PolarPoint:
    """Map a nonzero first-quadrant point to (r, theta) = (x+y, x/(x+y))."""
    x, y = float(p[0]), float(p[1])
    if x < 0 or y < 0 or not (np.isfinite(x) and np.isfinite(y)):
        raise ValueError(f"point must be finite and nonnegative, got {p}")
    r = x + y
    if r == 0.0:
        raise ValueError("L1-polar transform is undefined at the origin")
    return PolarPoint(r, x / r)


def cone_distances(x, y, cone: AngularCone) -> np.ndarray:
    """Scaled distance from points (x, y) to the cone, vectorized.

    d(x, y) = max{(1/b - 1) x - y, y - (1/a - 1) x, 0}. The distance is
    0 exactly on the cone, positive off it, and 1-homogeneous. For a
    degenerate cone a == b it reduces to |(1/a - 1) x - y|.

    Endpoint conventions: a == 0 drops the above-cone term and b == 0
    (the theta = 0 ray) puts every point with x > 0 at distance +inf.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if cone.a == 0.0:
        above = np.full(np.broadcast(x, y).shape, -np.inf)
    else:
        above = y - (1.0 / cone.a - 1.0) * x
    if cone.b == 0.0:
        below = np.where(x > 0, np.inf, -y)
    else:
        below = (1.0 / cone.b - 1.0) * x - y
    return np.maximum(np.maximum(above, below), 0.0)


def cone_distance(p: tuple[float, float], cone: AngularCone) -> float:
    """Scalar version of :func:`cone_distances`."""
    x, y = float(p[0]), float(p[1])
    if x < 0 or y < 0:
        raise ValueError(f"point must be nonnegative, got {p}")
    return float(cone_distances(np.array([x]), np.array([y]), cone)[0])


def generalized_polar(
    p: tuple[float, float], cone: AngularCone
) -> tuple[float, tuple[float, float]]:
    """Generalized polar coordinates off the cone.

    Returns (d, p/d) where d is the scaled cone distance; the direction
    component lies on the unit-distance locus around the cone. Defined
    only for points strictly off the cone.
    """
    d = cone_distance(p, cone)
    if d == 0.0:
        raise ValueError("generalized polar coordinates are undefined on the cone")
    return d, (p[0] / d, p[1] / d)


def radial_order(s: BivariateSample) -> RadialOrder:
    """Sort the sample by decreasing radius, carrying concomitants.

    Ties in the radius are broken by original sample index, so the
    result is deterministic. Raises if every point is at the origin.
    """
    r = s.radii
    if not np.any(r > 0):
        raise ValueError("all points are at the origin; no radial order exists")
    order = np.argsort(-r, kind="stable")
    sorted_r = r[order]
    theta = s.angles[order]
    out = RadialOrder(sorted_r=sorted_r, theta=theta, x=s.x[order], y=s.y[order])
    for arr in (out.sorted_r, out.theta, out.x, out.y):
        arr.setflags(write=False)
    return out


def log_returns(prices, stride: int = 1) -> np.ndarray:
    """Strided log returns log(p[(j+1)*stride] / p[j*stride]).

    A trailing partial stride window is dropped, so the result has
    floor((len(prices) - 1) / stride) entries.
    """
    p = np.asarray(prices, dtype=float)
    if int(stride) != stride or stride < 1:
        raise ValueError(f"stride must be a positive integer, got {stride}")
    stride = int(stride)
    if np.any(p <= 0) or not np.all(np.isfinite(p)):
        raise ValueError("prices must be positive and finite")
    if p.size <= stride:
        raise ValueError("need more prices than the stride")
    return np.diff(np.log(p[::stride]))


def acf(series, max_lag: int) -> np.ndarray:
    """Sample autocorrelation at lags 0..max_lag.

    Uses the biased (divide-by-n) autocovariance normalized by the
    lag-0 value, the convention of standard statistical plotting tools.
    """
    x = np.asarray(series, dtype=float)
    if int(max_lag) != max_lag or max_lag < 1:
        raise ValueError(f"max_lag must be a positive integer, got {max_lag}")
    max_lag = int(max_lag)
    n = x.size
    if n <= max_lag:
        raise ValueError("series must be longer than max_lag")
    xc = x - x.mean()
    c0 = float(np.dot(xc, xc)) / n
    if c0 == 0.0:
        raise ValueError("series is constant; autocorrelation is undefined")
    out = np.empty(max_lag + 1)
    out[0] = 1.0
    for h in range(1, max_lag + 1):
        out[h] = float(np.dot(xc[:-h], xc[h:])) / n / c0
    return out
