"""Seeded random streams with a fixed, documented derivation.

All randomness in the package flows through :class:`StableRNG`:

* raw 64-bit words come from numpy's ``PCG64`` bit generator seeded with
  the integer seed;
* a uniform double in ``[0, 1)`` is ``(word >> 11) * 2**-53``;
* normal deviates use the Box-Muller transform on consecutive uniform
  pairs ``(u1, u2)``, emitting ``r*cos(2*pi*u2)`` then ``r*sin(2*pi*u2)``
  with ``r = sqrt(-2*log(1 - u1))``; a trailing unpaired deviate is
  discarded;
* draws without replacement use a partial Fisher-Yates shuffle, one
  uniform per selected index.

Only the raw PCG64 stream is taken from numpy, so the sequence does not
depend on numpy's higher-level sampling routines, which may change between
releases.
"""

from __future__ import annotations

import math

import numpy as np

SEED_BOUND = 2**64


def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < SEED_BOUND:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


class StableRNG:
    def __init__(self, seed: int):
        self.seed = check_seed(seed)
        self._bits = np.random.PCG64(self.seed)

    def uniform(self, size: int) -> np.ndarray:
        words = self._bits.random_raw(size)
        return (words >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def normal(self, size: int) -> np.ndarray:
        pairs = (size + 1) // 2
        u = self.uniform(2 * pairs)
        radius = np.sqrt(-2.0 * np.log1p(-u[0::2]))
        angle = 2.0 * math.pi * u[1::2]
        out = np.empty(2 * pairs)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:size]

    def choice(self, n: int, k: int) -> np.ndarray:
        """Return ``k`` distinct indices from ``range(n)`` in draw order."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct items from {n}")
        pool = np.arange(n)
        u = self.uniform(k)
        for i in range(k):
            j = min(i + int(u[i] * (n - i)), n - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k].copy()
