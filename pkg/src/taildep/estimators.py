"""Tail-index and dependence statistics on the k largest radii.

All four statistics are functions of ratios R_(i)/R_(k) (and of the
1-homogeneous cone distance scaled by R_(k)), so they are invariant to
rescaling the whole sample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from taildep.tail_core import AngularCone, RadialOrder, cone_distances


@dataclass(frozen=True)
class StatisticValue:
    value: float
    k: int
    n: int


def _check_k(ord: RadialOrder, k: int) -> None:
    if int(k) != k or not (1 <= k < ord.n):
        raise ValueError(f"k must satisfy 1 <= k < n = {ord.n}, got {k}")


def _log_ratios(ord: RadialOrder, k: int) -> np.ndarray:
    """log(R_(i)/R_(k)) for i = 1..k; requires R_(k) > 0."""
    rk = ord.sorted_r[k - 1]
    if rk <= 0.0:
        raise ValueError(f"R_({k}) must be positive, got {rk}")
    return np.log(ord.sorted_r[:k] / rk)


def hill(ord: RadialOrder, k: int) -> StatisticValue:
    """Hill estimator of 1/alpha from the k largest radii.

    H = (1/k) sum_{i<=k} log(R_(i)/R_(k)); the i = k term is zero.
    """
    _check_k(ord, k)
    return StatisticValue(float(np.mean(_log_ratios(ord, k))), int(k), ord.n)


def cone_adjusted_hill(ord: RadialOrder, k: int, cone: AngularCone) -> StatisticValue:
    """Hill estimator inflated by the scaled distance of the top-k
    concomitant pairs to the cone.

    D = (1/k) sum_{i<=k} (1 + d_i / R_(k)) log(R_(i)/R_(k)) where d_i is
    the cone distance of the i-th concomitant pair. Equals the plain
    Hill estimator iff every contributing pair lies inside the cone; in
    particular the cone [0, 1] gives the Hill estimator exactly.
    """
    _check_k(ord, k)
    logr = _log_ratios(ord, k)
    rk = ord.sorted_r[k - 1]
    d = cone_distances(ord.x[:k], ord.y[:k], cone)
    with np.errstate(invalid="ignore"):
        terms = (1.0 + d / rk) * logr
    # inf * 0 at a zero log ratio: the log factor wins, the term is 0
    terms = np.nan_to_num(terms, nan=0.0, posinf=np.inf)
    return StatisticValue(float(np.mean(terms)), int(k), ord.n)


def angle_weighted_hill(ord: RadialOrder, k: int) -> StatisticValue:
    """Hill-type statistic weighted by the concomitant angles.

    T = sum_{i<=k} theta*_i log(R_(i)/R_(k)) / sum_{i<=k} theta*_i.
    Its sampling variance separates full from strong dependence.
    """
    _check_k(ord, k)
    logr = _log_ratios(ord, k)
    th = ord.theta[:k]
    denom = float(th.sum())
    if denom <= 0.0:
        raise ValueError("top-k concomitant angles sum to zero")
    return StatisticValue(float(np.dot(th, logr)) / denom, int(k), ord.n)


def masked_angle_weighted_hill(
    ord: RadialOrder, k: int, cone: AngularCone
) -> StatisticValue:
    """Angle-weighted statistic restricted to angles inside the cone.

    Radii and angles of points with angle outside [a, b] are zeroed
    before re-sorting, the log ratios are clamped below at 0, and the
    fully degenerate case (no mass in the cone) returns 1 by the
    0/0 == 1 convention. When the k-th masked radius is 0, each log
    term is taken as 0 (the minimal completion of the convention).
    """
    _check_k(ord, k)
    mask = cone.contains_angle(ord.theta)
    r_masked = np.where(mask, ord.sorted_r, 0.0)
    th_masked = np.where(mask, ord.theta, 0.0)
    order = np.argsort(-r_masked, kind="stable")
    r_top = r_masked[order][:k]
    th_top = th_masked[order][:k]
    denom = float(th_top.sum())
    if denom <= 0.0:
        return StatisticValue(1.0, int(k), ord.n)
    rk = r_top[k - 1]
    if rk > 0.0:
        terms = np.log(np.maximum(r_top / rk, 1.0))
    else:
        terms = np.zeros(k)
    return StatisticValue(float(np.dot(th_top, terms)) / denom, int(k), ord.n)
