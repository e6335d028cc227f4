import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pearson_kmeans.errors import EmptyListError, SizeMismatchError
from pearson_kmeans.evaluation import cross_entropy, prototype_norms, summarize_runs

memberships = st.integers(1, 40).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 5), min_size=n, max_size=n),
        st.lists(st.integers(0, 5), min_size=n, max_size=n),
    )
)


def oracle_entropy(clusters, labels):
    n = len(clusters)
    total = 0.0
    for c in set(clusters):
        members = [l for cc, l in zip(clusters, labels) if cc == c]
        h = 0.0
        for l in set(members):
            q = members.count(l) / len(members)
            h -= q * math.log2(q)
        total += len(members) / n * h
    return total


def test_identical_partitions():
    assert cross_entropy([0, 0, 1, 2], [0, 0, 1, 2]).entropy == 0.0


def test_crossed_partition_one_bit():
    # clusters {a,b},{c,d} vs labels {a,c},{b,d}
    res = cross_entropy([0, 0, 1, 1], [0, 1, 0, 1])
    assert res.entropy == pytest.approx(1.0, abs=1e-12)
    assert [(c.cluster, c.size) for c in res.per_cluster] == [(0, 2), (1, 2)]


def test_one_cluster_vs_singletons_two_bits():
    expected = -4 * 0.25 * math.log2(0.25)
    assert expected == 2.0
    assert cross_entropy([0, 0, 0, 0], [0, 1, 2, 3]).entropy == pytest.approx(expected, abs=1e-12)


def test_directional():
    a, b = [0, 0, 0, 0], [0, 1, 2, 3]
    assert cross_entropy(b, a).entropy == 0.0
    assert cross_entropy(a, b, direction="C1|C2").direction == "C1|C2"


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        cross_entropy([0, 1], [0, 1, 1])


@settings(max_examples=200, deadline=None)
@given(memberships)
def test_matches_oracle_and_bounds(pair):
    c, l = pair
    e = cross_entropy(c, l).entropy
    assert e == pytest.approx(oracle_entropy(c, l), abs=1e-12)
    assert 0.0 <= e <= math.log2(max(len(set(l)), 1)) + 1e-12
    assert cross_entropy(c, c).entropy == 0.0


@settings(max_examples=100, deadline=None)
@given(memberships, st.permutations(range(6)), st.permutations(range(6)))
def test_relabeling_invariance(pair, pc, pl):
    c, l = pair
    base = cross_entropy(c, l).entropy
    relabeled = cross_entropy([pc[x] for x in c], [pl[x] for x in l]).entropy
    assert relabeled == pytest.approx(base, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=1, max_size=40))
def test_refinement_is_zero(fine):
    coarse = [x // 3 for x in fine]
    assert cross_entropy(fine, coarse).entropy == 0.0


def test_prototype_norms():
    assert prototype_norms(np.eye(3)) == [1.0, 1.0, 1.0]
    assert prototype_norms(np.zeros((1, 4))) == [0.0]
    assert prototype_norms([[-0.5, -0.5, 0.5, 0.5]]) == pytest.approx([1.0], abs=1e-15)


def test_summarize_runs():
    assert summarize_runs([0.0, 0.0, 0.0]) == (0.0, 0.0, 0.0)
    lo, hi, mean = summarize_runs([0.32, 0.36])
    assert (lo, hi) == (0.32, 0.36)
    assert mean == pytest.approx(0.34, abs=1e-15)
    assert summarize_runs([1.0]) == (1.0, 1.0, 1.0)
    with pytest.raises(EmptyListError):
        summarize_runs([])
