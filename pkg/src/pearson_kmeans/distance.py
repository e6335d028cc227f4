"""Squared Euclidean and Pearson-correlation distances between series."""

from __future__ import annotations

import enum

import numpy as np

from .errors import ConstantSeriesError, LengthMismatchError


class DistanceKind(enum.Enum):
    SQUARED_EUCLIDEAN = "squared_euclidean"
    PEARSON = "pearson"


def _pair(r, s) -> tuple[np.ndarray, np.ndarray]:
    r = np.asarray(r, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    if r.ndim != 1 or s.ndim != 1:
        raise ValueError("distances are defined between one-dimensional series")
    if r.shape != s.shape:
        raise LengthMismatchError(f"series lengths differ: {r.size} vs {s.size}")
    if not (np.all(np.isfinite(r)) and np.all(np.isfinite(s))):
        raise ValueError("series contain NaN or infinite samples")
    return r, s


def squared_euclidean(r, s) -> float:
    r, s = _pair(r, s)
    diff = r - s
    return float(diff @ diff)


def pearson_coefficient(r, s) -> float:
    """Pearson correlation of two raw series, clamped to ``[-1, 1]``.

    Population (1/T) moments are used throughout.
    """
    r, s = _pair(r, s)
    for name, x in (("first", r), ("second", s)):
        if np.all(x == x[0]):
            raise ConstantSeriesError(f"{name} series is constant")
    rc = r - r.mean()
    sc = s - s.mean()
    cov = np.mean(rc * sc)
    rho = cov / (np.sqrt(np.mean(rc * rc)) * np.sqrt(np.mean(sc * sc)))
    return float(min(1.0, max(-1.0, rho)))


def pearson_distance(r, s) -> float:
    """``1 - pearson_coefficient(r, s)``; lies in ``[0, 2]``."""
    return 1.0 - pearson_coefficient(r, s)


_DISPATCH = {
    DistanceKind.SQUARED_EUCLIDEAN: squared_euclidean,
    DistanceKind.PEARSON: pearson_distance,
}


def distance(kind: DistanceKind | str, r, s) -> float:
    return _DISPATCH[DistanceKind(kind)](r, s)
