"""Batch k-Means with a mean update and a unit-norm (Pearson) update.

Both variants assign each series to the prototype at the smallest squared
Euclidean distance. They differ in the prototype step:

* ``STANDARD`` moves each prototype to the mean of its members, the
  minimizer of the summed squared Euclidean distance;
* ``PEARSON`` rescales that mean to unit norm, the minimizer of
  ``sum(1 - x @ p)`` subject to ``||p|| = 1``. On unit-norm data the
  objective term ``1 - x @ p`` is exactly the Pearson distance, and
  squared Euclidean distance to a unit prototype is twice it, so the
  assignment step is unchanged.

Empty clusters (and, for ``PEARSON``, clusters whose members sum to the
zero vector) are repaired by moving the prototype onto the series that is
currently farthest from its own prototype, lowest row index on ties.
Distances that agree to a relative 1e-10 are treated as ties throughout,
so rows that are duplicates up to rounding behave like exact duplicates.
"""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ._random import StableRNG, check_seed
from .errors import (
    ConventionError,
    ExplicitShapeMismatchError,
    KTooLargeError,
    ZeroNormPrototypeError,
)
from .series_core import Dataset, NormalizationConvention

ZERO_NORM_TOL = 1e-12
SWITCH_RTOL = 1e-10


class KMeansVariant(enum.Enum):
    STANDARD = "standard"
    PEARSON = "pearson"


@dataclass(frozen=True)
class KMeansConfig:
    """Settings for one k-Means run.

    ``init`` selects the initialization: ``None`` draws ``k`` distinct rows
    of the dataset with the seeded generator, an array of shape ``(k, T)``
    is used as explicit starting prototypes.
    """

    k: int
    max_iters: int = 300
    seed: int = 0
    variant: KMeansVariant = KMeansVariant.STANDARD
    init: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if int(self.k) < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if int(self.max_iters) < 1:
            raise ValueError(f"max_iters must be positive, got {self.max_iters}")
        check_seed(self.seed)
        object.__setattr__(self, "variant", KMeansVariant(self.variant))


@dataclass
class ClusteringResult:
    memberships: np.ndarray
    prototypes: np.ndarray
    objective_trace: list[float]
    iterations: int
    seed: int
    converged: bool
    initial_prototypes: np.ndarray


def _check_variant_convention(dataset: Dataset, variant: KMeansVariant):
    if (
        variant is KMeansVariant.PEARSON
        and dataset.convention is not NormalizationConvention.UNIT_NORM
    ):
        raise ConventionError(
            "the Pearson variant needs unit-norm series; "
            f"dataset uses {dataset.convention.value}"
        )


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    if norm < ZERO_NORM_TOL:
        raise ZeroNormPrototypeError("cannot scale a zero vector to unit norm")
    return v / norm


def init_prototypes(dataset: Dataset, config: KMeansConfig) -> np.ndarray:
    if config.k > dataset.n:
        raise KTooLargeError(f"k={config.k} exceeds the number of series n={dataset.n}")
    if config.init is None:
        rows = StableRNG(config.seed).choice(dataset.n, config.k)
        return dataset.values[rows].copy()

    init = np.array(config.init, dtype=np.float64)
    if init.shape != (config.k, dataset.T):
        raise ExplicitShapeMismatchError(
            f"explicit prototypes have shape {init.shape}, "
            f"expected ({config.k}, {dataset.T})"
        )
    if config.variant is KMeansVariant.PEARSON:
        init = np.vstack([_unit(p) for p in init])
    return init


def squared_distances(X: np.ndarray, prototypes: np.ndarray) -> np.ndarray:
    """``(n, k)`` matrix of squared Euclidean distances.

    Computed from explicit differences, one prototype at a time, so exact
    ties stay exact and the result does not depend on BLAS scheduling.
    """
    out = np.empty((X.shape[0], prototypes.shape[0]))
    for i, p in enumerate(prototypes):
        diff = X - p
        out[:, i] = np.einsum("ij,ij->i", diff, diff)
    return out


def _first_within_tol(values: np.ndarray, target: np.ndarray, axis: int = -1) -> np.ndarray:
    # First index whose value is within SWITCH_RTOL of ``target``; values
    # that differ only by rounding count as tied.
    slack = SWITCH_RTOL * np.maximum(np.abs(target), 1.0)
    return np.argmax(np.abs(values - target) <= slack, axis=axis)


def assign_memberships(
    dataset: Dataset, prototypes: np.ndarray, previous: np.ndarray | None = None
) -> np.ndarray:
    """Index of the nearest prototype per series; lowest index wins ties.

    Distances within a relative ``SWITCH_RTOL`` of the minimum count as
    tied. With ``previous`` memberships, a series stays put whenever its
    current prototype is among the tied nearest ones, so near-duplicate
    rows cannot flip between equivalent clusters forever.
    """
    prototypes = np.asarray(prototypes, dtype=np.float64)
    if prototypes.ndim != 2 or prototypes.shape[1] != dataset.T:
        raise ExplicitShapeMismatchError(
            f"prototypes have shape {prototypes.shape}, expected (k, {dataset.T})"
        )
    d = squared_distances(dataset.values, prototypes)
    d_min = d.min(axis=1, keepdims=True)
    best = _first_within_tol(d, d_min, axis=1)
    if previous is None:
        return best
    rows = np.arange(dataset.n)
    current = d[rows, previous]
    stay = current - d_min[:, 0] <= SWITCH_RTOL * np.maximum(d_min[:, 0], 1.0)
    return np.where(stay, previous, best)


def _cluster_sums(X: np.ndarray, memberships: np.ndarray, k: int):
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, memberships, X)
    counts = np.bincount(memberships, minlength=k)
    return sums, counts


def _repair(
    X: np.ndarray,
    memberships: np.ndarray,
    prototypes: np.ndarray,
    broken: list[int],
    unit: bool,
) -> np.ndarray:
    # Distances are to the provisional prototypes, so members of a
    # zero-sum cluster are measured against the zero vector.
    own = X - prototypes[memberships]
    spread = np.einsum("ij,ij->i", own, own)
    for i in broken:
        j = int(_first_within_tol(spread, spread.max()))
        candidate = X[j].copy()
        if unit:
            try:
                candidate = _unit(candidate)
            except ZeroNormPrototypeError:
                raise ZeroNormPrototypeError(
                    f"cluster {i} could not be repaired: donor row {j} has zero norm"
                ) from None
        prototypes[i] = candidate
        spread[j] = -1.0
    return prototypes


def _check_memberships(memberships, n: int, k: int) -> np.ndarray:
    m = np.asarray(memberships)
    if m.shape != (n,):
        raise ValueError(f"memberships have shape {m.shape}, expected ({n},)")
    if m.size and (m.min() < 0 or m.max() >= k):
        raise ValueError(f"membership indices must lie in [0, {k})")
    return m.astype(np.intp)


def update_prototypes_mean(
    dataset: Dataset, memberships, k: int, repair: bool = True
) -> np.ndarray:
    """Mean of each cluster's members; empty clusters repaired.

    With ``repair=False`` an empty cluster raises instead.
    """
    X = dataset.values
    m = _check_memberships(memberships, dataset.n, k)
    sums, counts = _cluster_sums(X, m, k)
    prototypes = np.zeros_like(sums)
    filled = counts > 0
    prototypes[filled] = sums[filled] / counts[filled, None]
    broken = np.flatnonzero(~filled).tolist()
    if broken:
        if not repair:
            raise ZeroNormPrototypeError(f"clusters {broken} are empty")
        prototypes = _repair(X, m, prototypes, broken, unit=False)
    return prototypes


def update_prototypes_pearson(
    dataset: Dataset, memberships, k: int, repair: bool = True
) -> np.ndarray:
    """Unit-norm direction of each cluster's member sum.

    The mean is normalized rather than the raw sum; both have the same
    direction and the mean keeps magnitudes bounded for large clusters.

    Raises:
        ConventionError: dataset is not in the unit-norm convention.
        ZeroNormPrototypeError: a cluster is empty or its members cancel
            (sum norm below 1e-12) and ``repair`` is off, or the repair
            itself fails.
    """
    _check_variant_convention(dataset, KMeansVariant.PEARSON)
    X = dataset.values
    m = _check_memberships(memberships, dataset.n, k)
    sums, counts = _cluster_sums(X, m, k)
    means = np.zeros_like(sums)
    filled = counts > 0
    means[filled] = sums[filled] / counts[filled, None]
    sum_norms = np.linalg.norm(sums, axis=1)
    mean_norms = np.linalg.norm(means, axis=1)
    ok = filled & (sum_norms >= ZERO_NORM_TOL)
    prototypes = means.copy()
    prototypes[ok] = means[ok] / mean_norms[ok, None]
    broken = np.flatnonzero(~ok).tolist()
    if broken:
        if not repair:
            raise ZeroNormPrototypeError(
                f"clusters {broken} have no usable direction (empty or members cancel)"
            )
        prototypes = _repair(X, m, prototypes, broken, unit=True)
    return prototypes


def objective(
    dataset: Dataset,
    memberships,
    prototypes: np.ndarray,
    variant: KMeansVariant = KMeansVariant.STANDARD,
) -> float:
    """Summed distance of every series to its assigned prototype.

    ``STANDARD`` sums squared Euclidean distances; ``PEARSON`` sums
    ``1 - x @ p``. The unit-norm constraint term is omitted since the
    Pearson update satisfies it exactly.
    """
    X = dataset.values
    prototypes = np.asarray(prototypes, dtype=np.float64)
    m = _check_memberships(memberships, dataset.n, prototypes.shape[0])
    assigned = prototypes[m]
    if KMeansVariant(variant) is KMeansVariant.PEARSON:
        return float(np.sum(1.0 - np.einsum("ij,ij->i", X, assigned)))
    diff = X - assigned
    return float(np.sum(np.einsum("ij,ij->i", diff, diff)))


IterationCallback = Callable[[int, np.ndarray, np.ndarray], None]


def run(
    dataset: Dataset,
    config: KMeansConfig,
    callback: IterationCallback | None = None,
) -> ClusteringResult:
    """Run batch k-Means until memberships stop changing.

    ``callback(iteration, memberships, prototypes)`` is invoked after every
    prototype update, with 1-based iteration numbers.
    """
    _check_variant_convention(dataset, config.variant)
    update = (
        update_prototypes_pearson
        if config.variant is KMeansVariant.PEARSON
        else update_prototypes_mean
    )
    k = config.k
    initial = init_prototypes(dataset, config)
    prototypes = initial.copy()
    memberships = None
    trace: list[float] = []
    converged = False
    iterations = 0

    for iterations in range(1, config.max_iters + 1):
        new = assign_memberships(dataset, prototypes, memberships)
        if memberships is not None and np.array_equal(new, memberships):
            converged = True
            break
        memberships = new
        prototypes = update(dataset, memberships, k)
        trace.append(objective(dataset, memberships, prototypes, config.variant))
        if callback is not None:
            callback(iterations, memberships.copy(), prototypes.copy())

    return ClusteringResult(
        memberships=memberships,
        prototypes=prototypes,
        objective_trace=trace,
        iterations=iterations,
        seed=config.seed,
        converged=converged,
        initial_prototypes=initial,
    )
