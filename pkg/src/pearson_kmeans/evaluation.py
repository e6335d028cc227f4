"""Agreement between two partitions, and run statistics."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import EmptyListError, SizeMismatchError

LOG_BASE = 2


@dataclass(frozen=True)
class ClusterEntropy:
    cluster: int
    size: int
    entropy: float


@dataclass(frozen=True)
class ClusterComparison:
    """Size-weighted entropy of ``clusters`` measured against ``labels``.

    ``direction`` names which partition supplied the clusters and which
    the labels, e.g. ``"C1|C2"``. Entropies are in bits.
    """

    entropy: float
    per_cluster: tuple[ClusterEntropy, ...]
    direction: str = "clusters|labels"
    log_base: int = LOG_BASE


def cross_entropy(clusters, labels, direction: str = "clusters|labels") -> ClusterComparison:
    """Entropy of the label distribution inside each cluster, averaged by size.

    Zero means every cluster lies inside a single label class. The measure
    is directional: ``cross_entropy(a, b)`` and ``cross_entropy(b, a)``
    generally differ.
    """
    clusters = np.asarray(clusters)
    labels = np.asarray(labels)
    if clusters.ndim != 1 or clusters.shape != labels.shape:
        raise SizeMismatchError(
            f"partitions cover different objects: {clusters.shape} vs {labels.shape}"
        )
    n = clusters.size
    if n == 0:
        return ClusterComparison(0.0, (), direction)

    cluster_ids, c = np.unique(clusters, return_inverse=True)
    _, l = np.unique(labels, return_inverse=True)
    table = np.zeros((cluster_ids.size, l.max() + 1), dtype=np.int64)
    np.add.at(table, (c, l), 1)

    per_cluster = []
    total = 0.0
    for cid, row in zip(cluster_ids, table):
        size = int(row.sum())
        q = row[row > 0] / size
        h = float(-np.sum(q * np.log2(q))) + 0.0  # no -0.0
        per_cluster.append(ClusterEntropy(cid.item(), size, h))
        total += size / n * h
    return ClusterComparison(total, tuple(per_cluster), direction)


def prototype_norms(prototypes) -> list[float]:
    return [float(v) for v in np.linalg.norm(np.atleast_2d(prototypes), axis=1)]


def summarize_runs(values: Sequence[float]) -> tuple[float, float, float]:
    """Return ``(min, max, mean)`` of a non-empty sequence."""
    if len(values) == 0:
        raise EmptyListError("cannot summarize an empty list of runs")
    arr = np.asarray(values, dtype=np.float64)
    return float(arr.min()), float(arr.max()), float(arr.mean())
