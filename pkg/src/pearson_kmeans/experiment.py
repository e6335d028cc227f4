"""Multi-run experiments built on the k-Means engine.

Seeds: run ``r`` of an experiment with base seed ``b`` uses
``(b + 2r) mod 2**64`` for its primary initialization and
``(b + 2r + 1) mod 2**64`` for the alternative one, so the two never
coincide within an experiment and every run replays exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

import numpy as np

from . import kmeans
from ._random import SEED_BOUND, check_seed
from .datagen import (
    DevilsAdvocateConfig,
    generate_devils_advocate,
    increasing_cluster,
    INIT_MODES,
    probe_split,
    sampled_row_prototypes,
    template_prototypes,
)
from .errors import ClusteringError, KTooLargeError
from .evaluation import LOG_BASE, cross_entropy, prototype_norms, summarize_runs
from .kmeans import KMeansConfig, KMeansVariant
from .ucr import LabeledDataset

logger = logging.getLogger(__name__)


def derive_seeds(base_seed: int, run_index: int) -> tuple[int, int]:
    base = check_seed(base_seed)
    primary = (base + 2 * run_index) % SEED_BOUND
    return primary, (primary + 1) % SEED_BOUND


@dataclass
class ProtocolRun:
    run_index: int
    seed: int
    alt_seed: int
    e_pear: float | None = None
    e_random: float | None = None
    standard_norms: list[float] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class ProtocolReport:
    dataset_name: str
    k: int
    T: int
    n: int
    runs: list[ProtocolRun]
    log_base: int = LOG_BASE

    @property
    def completed(self) -> list[ProtocolRun]:
        return [r for r in self.runs if r.ok]

    @property
    def failed(self) -> list[ProtocolRun]:
        return [r for r in self.runs if not r.ok]

    def summary(self) -> dict[str, tuple[float, float, float]] | None:
        done = self.completed
        if not done:
            return None
        return {
            "E_pear": summarize_runs([r.e_pear for r in done]),
            "E_random": summarize_runs([r.e_random for r in done]),
        }


def _resolve_k(data: LabeledDataset, k: int | None) -> int:
    k = data.class_count if k is None else int(k)
    if k > data.n:
        raise KTooLargeError(f"k={k} exceeds the number of series n={data.n}")
    return k


def run_protocol(
    data: LabeledDataset,
    runs: int = 5,
    base_seed: int = 0,
    k: int | None = None,
    max_iters: int = 300,
) -> ProtocolReport:
    """Compare standard vs Pearson k-Means against re-initialization noise.

    For each run three clusterings are built on the same data: C1 standard
    from a seeded random draw, C2 Pearson from the same starting rows, and
    C3 standard from a different draw. ``E_pear`` is the entropy of C1
    with respect to C2 and ``E_random`` that of C1 with respect to C3.
    ``k`` defaults to the number of classes. A run that raises is recorded
    with its error and left out of the summary.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    k = _resolve_k(data, k)
    ds = data.dataset
    records = []
    for r in range(runs):
        seed, alt_seed = derive_seeds(base_seed, r)
        rec = ProtocolRun(r, seed, alt_seed)
        try:
            c1 = kmeans.run(ds, KMeansConfig(k, max_iters, seed, KMeansVariant.STANDARD))
            # C2 starts from C1's initial rows; init_prototypes rescales them.
            c2 = kmeans.run(
                ds,
                KMeansConfig(
                    k, max_iters, seed, KMeansVariant.PEARSON, init=c1.initial_prototypes
                ),
            )
            c3 = kmeans.run(ds, KMeansConfig(k, max_iters, alt_seed, KMeansVariant.STANDARD))
            rec.e_pear = cross_entropy(c1.memberships, c2.memberships, "C1|C2").entropy
            rec.e_random = cross_entropy(c1.memberships, c3.memberships, "C1|C3").entropy
            rec.standard_norms = prototype_norms(c1.prototypes)
            for name, res in (("C1", c1), ("C2", c2), ("C3", c3)):
                if not res.converged:
                    logger.warning("run %d: %s hit max_iters=%d", r, name, max_iters)
        except ClusteringError as exc:
            logger.warning("run %d failed: %s", r, exc)
            rec.error = f"{exc.code}: {exc}"
        records.append(rec)
    return ProtocolReport(data.name, k, data.T, data.n, records)


@dataclass
class VariantRun:
    run_index: int
    seed: int
    objective: float | None = None
    iterations: int = 0
    converged: bool = False
    prototype_norms: list[float] = field(default_factory=list)
    memberships: np.ndarray | None = field(default=None, repr=False)
    error: str | None = None


@dataclass
class VariantReport:
    dataset_name: str
    variant: KMeansVariant
    k: int
    T: int
    n: int
    runs: list[VariantRun]


def run_variant(
    data: LabeledDataset,
    variant: KMeansVariant,
    runs: int = 5,
    base_seed: int = 0,
    k: int | None = None,
    max_iters: int = 300,
) -> VariantReport:
    """Run one k-Means variant ``runs`` times from seeded random draws."""
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    variant = KMeansVariant(variant)
    k = _resolve_k(data, k)
    records = []
    for r in range(runs):
        seed, _ = derive_seeds(base_seed, r)
        rec = VariantRun(r, seed)
        try:
            res = kmeans.run(data.dataset, KMeansConfig(k, max_iters, seed, variant))
            rec.objective = res.objective_trace[-1]
            rec.iterations = res.iterations
            rec.converged = res.converged
            rec.prototype_norms = prototype_norms(res.prototypes)
            rec.memberships = res.memberships
        except ClusteringError as exc:
            logger.warning("run %d failed: %s", r, exc)
            rec.error = f"{exc.code}: {exc}"
        records.append(rec)
    return VariantReport(data.name, variant, k, data.T, data.n, records)


@dataclass
class DevilsAdvocateRun:
    run_index: int
    seed: int
    variant: KMeansVariant
    to_increasing: int
    to_decreasing: int
    norm_increasing: float
    norm_decreasing: float
    iterations: int
    converged: bool


@dataclass
class DevilsAdvocateReport:
    config: DevilsAdvocateConfig
    runs: list[DevilsAdvocateRun]
    init: str = "templates"

    def for_variant(self, variant: KMeansVariant) -> list[DevilsAdvocateRun]:
        return [r for r in self.runs if r.variant is variant]

    def mean_split(self, variant: KMeansVariant) -> tuple[float, float]:
        rows = self.for_variant(variant)
        return (
            float(np.mean([r.to_increasing for r in rows])),
            float(np.mean([r.to_decreasing for r in rows])),
        )


def run_devils_advocate(
    config: DevilsAdvocateConfig = DevilsAdvocateConfig(),
    runs: int = 50,
    max_iters: int = 300,
    init: str = "templates",
) -> DevilsAdvocateReport:
    """Cluster fresh noisy trend data per run with both variants.

    Run ``r`` generates data with seed ``config.seed + r``. Both variants
    start from the same two prototypes, so the only difference between
    them is the prototype update: with ``init="templates"`` the noise-free
    ramps, with ``init="rows"`` one increasing and one decreasing row drawn
    from the run's data with the same seed.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if init not in INIT_MODES:
        raise ValueError(f"init must be one of {INIT_MODES}, got {init!r}")
    records = []
    for r in range(runs):
        seed = (config.seed + r) % SEED_BOUND
        tagged = generate_devils_advocate(replace(config, seed=seed))
        start = template_prototypes() if init == "templates" else sampled_row_prototypes(tagged, seed)
        for variant in (KMeansVariant.STANDARD, KMeansVariant.PEARSON):
            res = kmeans.run(
                tagged.dataset, KMeansConfig(2, max_iters, seed, variant, init=start)
            )
            to_inc, to_dec = probe_split(res, tagged)
            inc = increasing_cluster(res.prototypes)
            norms = prototype_norms(res.prototypes)
            records.append(
                DevilsAdvocateRun(
                    r, seed, variant, to_inc, to_dec,
                    norms[inc], norms[1 - inc], res.iterations, res.converged,
                )
            )
    return DevilsAdvocateReport(config, records, init)
