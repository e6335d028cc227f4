import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pearson_kmeans.distance import (
    DistanceKind,
    distance,
    pearson_coefficient,
    pearson_distance,
    squared_euclidean,
)
from pearson_kmeans.errors import ConstantSeriesError, LengthMismatchError
from pearson_kmeans.series_core import NormalizationConvention, zscore_normalize

UNIT = NormalizationConvention.UNIT_NORM
SIGMA = NormalizationConvention.POPULATION_SIGMA


def test_squared_euclidean_examples():
    assert squared_euclidean((0, 0, 0), (0, 0, 0)) == 0.0
    # (1-3)^2 + (2-2)^2 + (3-1)^2
    assert squared_euclidean((1, 2, 3), (3, 2, 1)) == 4 + 0 + 4


def test_squared_euclidean_symmetric(rng):
    for _ in range(50):
        r, s = rng.normal(size=(2, 17))
        assert squared_euclidean(r, s) == squared_euclidean(s, r)
        assert squared_euclidean(r, s) > 0


def test_length_mismatch():
    with pytest.raises(LengthMismatchError):
        squared_euclidean((1, 2), (1, 2, 3))
    with pytest.raises(LengthMismatchError):
        pearson_distance((1, 2), (1, 2, 3))


def test_pearson_examples():
    assert pearson_coefficient((1, 2, 3), (2, 4, 6)) == pytest.approx(1.0, abs=1e-15)
    assert pearson_coefficient((1, 2, 3), (3, 2, 1)) == pytest.approx(-1.0, abs=1e-15)
    # centered (-.5,.5,-.5,.5) . (-2,-2,2,2) = 0
    assert np.dot([-0.5, 0.5, -0.5, 0.5], [-2, -2, 2, 2]) == 0
    assert pearson_coefficient((1, 2, 1, 2), (5, 5, 9, 9)) == pytest.approx(0.0, abs=1e-15)

    assert pearson_distance((1, 2, 3), (2, 4, 6)) == pytest.approx(0.0, abs=1e-15)
    assert pearson_distance((1, 2, 3), (3, 2, 1)) == pytest.approx(2.0, abs=1e-15)
    assert pearson_distance((1, 2, 1, 2), (5, 5, 9, 9)) == pytest.approx(1.0, abs=1e-15)


def test_pearson_matches_numpy(rng):
    for _ in range(100):
        r, s = rng.normal(size=(2, int(rng.integers(2, 50))))
        assert pearson_coefficient(r, s) == pytest.approx(np.corrcoef(r, s)[0, 1], abs=1e-12)


def test_pearson_clamped():
    x = np.array([0.1, 0.2, 0.30000000000000004, 0.7])
    rho = pearson_coefficient(x, x * 3.0 + 1e-9)
    assert -1.0 <= rho <= 1.0
    assert 0.0 <= pearson_distance(x, x) <= 2.0


def test_pearson_constant():
    with pytest.raises(ConstantSeriesError):
        pearson_coefficient((1, 1, 1), (1, 2, 3))
    with pytest.raises(ConstantSeriesError):
        pearson_distance((1, 2, 3), (4, 4, 4))


def test_dispatch():
    x = (3.0, -1.0, 2.5, 0.0)
    assert distance(DistanceKind.SQUARED_EUCLIDEAN, x, x) == 0.0
    assert distance(DistanceKind.PEARSON, x, x) == pytest.approx(0.0, abs=1e-15)
    assert distance("squared_euclidean", (1, 2, 3), (3, 2, 1)) == 8.0
    with pytest.raises(ConstantSeriesError):
        distance(DistanceKind.PEARSON, (2, 2, 2, 2), x)


pairs = st.integers(2, 128).flatmap(
    lambda T: st.tuples(
        *[
            arrays(np.float64, T, elements=st.floats(-100, 100)).filter(
                lambda x: np.ptp(x) > 1e-2
            )
            for _ in range(2)
        ]
    )
)


@settings(max_examples=300, deadline=None)
@given(pairs)
def test_equivalence_population_sigma(pair):
    r, s = pair
    T = r.size
    dE = squared_euclidean(zscore_normalize(r, SIGMA).samples, zscore_normalize(s, SIGMA).samples)
    assert abs(dE - 2 * T * pearson_distance(r, s)) <= 1e-9 * T


@settings(max_examples=300, deadline=None)
@given(pairs)
def test_equivalence_unit_norm(pair):
    r, s = pair
    dE = squared_euclidean(zscore_normalize(r, UNIT).samples, zscore_normalize(s, UNIT).samples)
    assert abs(dE - 2 * pearson_distance(r, s)) <= 1e-9


@settings(max_examples=200, deadline=None)
@given(
    pairs,
    st.floats(-50, 50), st.floats(0.01, 100), st.floats(-50, 50), st.floats(0.01, 100),
)
def test_pearson_shift_scale_invariant(pair, a, b, c, d):
    r, s = pair
    assert pearson_distance(a + b * r, c + d * s) == pytest.approx(pearson_distance(r, s), abs=1e-9)


def test_ranking_transfer(rng):
    checked = 0
    for convention in (SIGMA, UNIT):
        for _ in range(500):
            T = int(rng.integers(3, 64))
            q, a, b = rng.normal(size=(3, T))
            nq, na, nb = (zscore_normalize(v, convention).samples for v in (q, a, b))
            pa, pb = pearson_distance(q, a), pearson_distance(q, b)
            if abs(pa - pb) <= 1e-9:
                continue
            ea, eb = squared_euclidean(nq, na), squared_euclidean(nq, nb)
            assert (ea < eb) == (pa < pb)
            checked += 1
    assert checked > 900
