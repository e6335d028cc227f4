import numpy as np
import pytest

from pearson_kmeans.series_core import NormalizationConvention, validate_and_normalize_dataset

UNIT = NormalizationConvention.UNIT_NORM
SIGMA = NormalizationConvention.POPULATION_SIGMA


def random_dataset(rng, n, T, convention=UNIT):
    raw = rng.normal(size=(n, T))
    return validate_and_normalize_dataset(list(raw), convention)[0]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
