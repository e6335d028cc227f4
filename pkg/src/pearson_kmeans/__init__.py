"""Time-series clustering with Euclidean and Pearson-correlation distances."""

from .distance import (
    DistanceKind,
    distance,
    pearson_coefficient,
    pearson_distance,
    squared_euclidean,
)
from .errors import ClusteringError
from .evaluation import cross_entropy, prototype_norms, summarize_runs
from .kmeans import ClusteringResult, KMeansConfig, KMeansVariant, run
from .series_core import (
    Dataset,
    NormalizationConvention,
    NormalizedSeries,
    validate_and_normalize_dataset,
    zscore_normalize,
)

__all__ = [
    "ClusteringError",
    "ClusteringResult",
    "Dataset",
    "DistanceKind",
    "KMeansConfig",
    "KMeansVariant",
    "NormalizationConvention",
    "NormalizedSeries",
    "cross_entropy",
    "distance",
    "pearson_coefficient",
    "pearson_distance",
    "prototype_norms",
    "run",
    "squared_euclidean",
    "summarize_runs",
    "validate_and_normalize_dataset",
    "zscore_normalize",
]
