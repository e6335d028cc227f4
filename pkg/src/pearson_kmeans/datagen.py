"""Synthetic two-trend dataset with ambiguous probe series.

Three groups of length-32 series are generated: increasing ramps with
heavy noise, decreasing ramps with light noise, and V-shaped probes that
correlate equally with both ramps. Under a clustering that truly follows
Pearson correlation the probes should split evenly between the two trend
clusters; a skew toward the noisier cluster exposes the bias of the plain
mean update.

The default probe is the neutral V ``(16, ..., 2, 1, 1, 2, ..., 16)``.
``probe="literal"`` selects ``(16, ..., 1, 0, 1, ..., 15)``, which leans
slightly toward the decreasing ramp.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._random import StableRNG, check_seed
from .distance import pearson_coefficient
from .errors import AmbiguousClusterIdentityError
from .kmeans import ClusteringResult
from .series_core import Dataset, NormalizationConvention, _normalize_rows
from .ucr import write_ucr

T = 32
INCREASING = np.arange(T, dtype=np.float64)
DECREASING = INCREASING[::-1].copy()
# Symmetric about the midpoint, hence uncorrelated with any linear ramp.
PROBE_SYMMETRIC = np.abs(np.arange(T) - 15.5) + 0.5
# (16, 15, ..., 1, 0, 1, ..., 15): slightly closer to the decreasing ramp
# (correlation +0.093 vs -0.093 with the increasing one).
PROBE_LITERAL = np.abs(np.arange(T) - 16.0)

PROBE_TEMPLATES = {"symmetric": PROBE_SYMMETRIC, "literal": PROBE_LITERAL}


class Group(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    PROBE = "probe"


@dataclass(frozen=True)
class DevilsAdvocateConfig:
    n_per_cluster: int = 100
    n_probes: int = 10
    sigma_increasing: float = 30.0
    sigma_decreasing: float = 10.0
    sigma_probe: float = 10.0
    seed: int = 0
    probe: str = "symmetric"

    def __post_init__(self):
        if self.n_per_cluster < 1 or self.n_probes < 1:
            raise ValueError("group sizes must be at least 1")
        if min(self.sigma_increasing, self.sigma_decreasing, self.sigma_probe) < 0:
            raise ValueError("noise levels must be non-negative")
        if self.probe not in PROBE_TEMPLATES:
            raise ValueError(
                f"unknown probe template {self.probe!r}; "
                f"choose from {sorted(PROBE_TEMPLATES)}"
            )
        check_seed(self.seed)


@dataclass(frozen=True)
class TaggedDataset:
    dataset: Dataset
    group_of: tuple[Group, ...]

    def rows(self, group: Group) -> np.ndarray:
        return np.array([i for i, g in enumerate(self.group_of) if g is group])


def generate_devils_advocate(config: DevilsAdvocateConfig = DevilsAdvocateConfig()) -> TaggedDataset:
    """Draw the three groups, add Gaussian noise, normalize to unit norm.

    Rows are ordered increasing, decreasing, probes; each row consumes
    ``T`` normal deviates from a single seeded stream in that order. A row
    that comes out constant is redrawn from the following deviates.
    """
    rng = StableRNG(config.seed)
    plan = [
        (Group.INCREASING, INCREASING, config.sigma_increasing, config.n_per_cluster),
        (Group.DECREASING, DECREASING, config.sigma_decreasing, config.n_per_cluster),
        (Group.PROBE, PROBE_TEMPLATES[config.probe], config.sigma_probe, config.n_probes),
    ]
    rows, tags = [], []
    for group, template, sigma, count in plan:
        for _ in range(count):
            row = template + sigma * rng.normal(T)
            while np.all(row == row[0]):
                row = template + sigma * rng.normal(T)
            rows.append(row)
            tags.append(group)
    values = _normalize_rows(np.vstack(rows), NormalizationConvention.UNIT_NORM)
    labels = tuple(g.value for g in tags)
    return TaggedDataset(
        Dataset(values, NormalizationConvention.UNIT_NORM, labels), tuple(tags)
    )


def template_prototypes() -> np.ndarray:
    """Unit-norm increasing and decreasing ramps, shape ``(2, 32)``."""
    return _normalize_rows(
        np.vstack([INCREASING, DECREASING]), NormalizationConvention.UNIT_NORM
    )


def sampled_row_prototypes(tagged: TaggedDataset, seed: int = 0) -> np.ndarray:
    """One randomly drawn increasing row and one decreasing row, shape ``(2, 32)``.

    The alternative to noise-free templates: starting prototypes taken
    from the noisy data itself.
    """
    rng = StableRNG(seed)
    picks = []
    for group in (Group.INCREASING, Group.DECREASING):
        rows = tagged.rows(group)
        picks.append(rows[rng.choice(rows.size, 1)[0]])
    return tagged.dataset.values[picks].copy()


INIT_MODES = ("templates", "rows")


def increasing_cluster(prototypes: np.ndarray) -> int:
    """Index (0 or 1) of the prototype better correlated with the up-ramp."""
    rho = [pearson_coefficient(p, INCREASING) for p in prototypes]
    if abs(rho[0] - rho[1]) <= 1e-9:
        raise AmbiguousClusterIdentityError(
            f"both prototypes correlate equally with the increasing ramp ({rho[0]:.6f})"
        )
    return int(np.argmax(rho))


def probe_split(result: ClusteringResult, tagged: TaggedDataset) -> tuple[int, int]:
    """Count probes assigned to the increasing and decreasing clusters."""
    if result.prototypes.shape[0] != 2:
        raise ValueError("probe split needs a two-cluster result")
    inc = increasing_cluster(result.prototypes)
    assigned = result.memberships[tagged.rows(Group.PROBE)]
    to_increasing = int(np.sum(assigned == inc))
    return to_increasing, assigned.size - to_increasing


def write_tagged(tagged: TaggedDataset, path) -> None:
    """Write the normalized rows as a UCR file with group names as labels."""
    write_ucr(path, [g.value for g in tagged.group_of], tagged.dataset.values)
