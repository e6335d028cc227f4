"""Labelled multi-group test data: shifted, scaled copies of one template per group."""

import numpy as np

from pearson_kmeans.series_core import NormalizationConvention, validate_and_normalize_dataset
from pearson_kmeans.ucr import LabeledDataset


def correlated_groups(seed, k, per_group=12, T=64, noise=0.0, name=None):
    rng = np.random.default_rng(seed)
    templates = rng.normal(size=(k, T))
    raw, labels = [], []
    for i, tpl in enumerate(templates):
        for _ in range(per_group):
            raw.append(2 * rng.normal() + rng.uniform(0.5, 3) * tpl + noise * rng.normal(size=T))
            labels.append(f"c{i}")
    ds, _ = validate_and_normalize_dataset(raw, NormalizationConvention.UNIT_NORM, labels=labels)
    return LabeledDataset(ds, tuple(labels), name=name or f"groups{seed}")
