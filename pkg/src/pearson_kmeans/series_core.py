"""Time-series containers and z-score normalization.

Two normalization conventions are supported. Both center each series to
zero mean; they differ only in scale:

``POPULATION_SIGMA``
    divide by the population standard deviation (1/T variance), so the
    sum of squares equals ``T``. Squared Euclidean distance between two
    such series is ``2 * T`` times their Pearson distance.
``UNIT_NORM``
    additionally divide by ``sqrt(T)``, so every series has Euclidean norm
    one. Squared Euclidean distance is then ``2`` times the Pearson
    distance, and ``1 - x @ p`` is exactly the Pearson distance to any
    unit-norm prototype ``p``.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstantSeriesError, EmptyDatasetError, LengthMismatchError


class NormalizationConvention(enum.Enum):
    POPULATION_SIGMA = "zscore"
    UNIT_NORM = "unitnorm"


def as_time_series(samples) -> np.ndarray:
    """Validate ``samples`` as a raw series and return a float64 copy."""
    x = np.array(samples, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"a time series must be one-dimensional, got shape {x.shape}")
    if x.size < 2:
        raise ValueError(f"a time series needs at least 2 samples, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValueError("time series contains NaN or infinite samples")
    return x


def _constant_rows(X: np.ndarray) -> np.ndarray:
    return np.flatnonzero(np.all(X == X[:, :1], axis=1))


def _normalize_rows(X: np.ndarray, convention: NormalizationConvention) -> np.ndarray:
    # Rows are assumed non-constant. Centering twice removes the rounding
    # left in the mean by the first pass.
    T = X.shape[1]
    centered = X - X.mean(axis=1, keepdims=True)
    centered -= centered.mean(axis=1, keepdims=True)
    sigma = np.sqrt(np.mean(centered**2, axis=1, keepdims=True))
    out = centered / sigma
    if convention is NormalizationConvention.UNIT_NORM:
        out = out / np.sqrt(T)
    return out


@dataclass(frozen=True)
class NormalizedSeries:
    samples: np.ndarray
    convention: NormalizationConvention

    def __post_init__(self):
        self.samples.setflags(write=False)

    def __len__(self) -> int:
        return self.samples.size


def zscore_normalize(
    series, convention: NormalizationConvention = NormalizationConvention.UNIT_NORM
) -> NormalizedSeries:
    """Center ``series`` to zero mean and rescale it per ``convention``.

    Raises:
        ConstantSeriesError: if every sample is equal; such a series has
            zero variance and no defined Pearson correlation.
    """
    x = as_time_series(series)
    if np.all(x == x[0]):
        raise ConstantSeriesError("cannot normalize a constant series", rows=[0])
    return NormalizedSeries(_normalize_rows(x[None, :], convention)[0], convention)


@dataclass(frozen=True)
class Dataset:
    """``n`` normalized series of common length ``T``, stored row-wise.

    Instances are read-only; ``values`` has shape ``(n, T)``.
    """

    values: np.ndarray
    convention: NormalizationConvention
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] < 1:
            raise EmptyDatasetError("a dataset needs at least one series")
        if values.shape[1] < 2:
            raise ValueError("series in a dataset need at least 2 samples")
        if self.labels is not None and len(self.labels) != values.shape[0]:
            raise LengthMismatchError(
                f"{len(self.labels)} labels for {values.shape[0]} series"
            )
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def T(self) -> int:
        return self.values.shape[1]

    def __len__(self) -> int:
        return self.n

    def series(self, i: int) -> NormalizedSeries:
        return NormalizedSeries(self.values[i].copy(), self.convention)


def validate_and_normalize_dataset(
    raw: Sequence,
    convention: NormalizationConvention = NormalizationConvention.UNIT_NORM,
    drop_constant: bool = False,
    labels: Sequence[str] | None = None,
) -> tuple[Dataset, list[int]]:
    """Normalize every row of ``raw`` and bundle the result as a Dataset.

    Returns the dataset and the indices (into ``raw``) of dropped constant
    rows. Without ``drop_constant`` any constant row raises
    :class:`ConstantSeriesError` listing all offending indices.
    """
    rows = [as_time_series(r) for r in raw]
    if not rows:
        raise EmptyDatasetError("no series supplied")
    T = rows[0].size
    for i, r in enumerate(rows):
        if r.size != T:
            raise LengthMismatchError(f"row {i} has length {r.size}, expected {T}")
    if labels is not None and len(labels) != len(rows):
        raise LengthMismatchError(f"{len(labels)} labels for {len(rows)} series")

    X = np.vstack(rows)
    constant = _constant_rows(X).tolist()
    if constant and not drop_constant:
        raise ConstantSeriesError(
            f"constant series at rows {constant}", rows=constant
        )
    keep = np.setdiff1d(np.arange(len(rows)), constant)
    if keep.size == 0:
        raise EmptyDatasetError("every series is constant")
    kept_labels = None if labels is None else tuple(str(labels[i]) for i in keep)
    dataset = Dataset(_normalize_rows(X[keep], convention), convention, kept_labels)
    return dataset, constant
