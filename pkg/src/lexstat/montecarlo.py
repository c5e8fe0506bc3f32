"""Seeded, reproducible Monte Carlo engines for coupon-style draws.

Replicates are processed in fixed-size chunks; chunk ``c`` draws from a
counter-based Philox stream keyed by ``(seed, c)``, so results depend only
on the seed and replicate index, never on scheduling or worker count.
Within a chunk the draw loop is vectorized column-wise: one categorical
draw per still-active replicate per step.
"""

from __future__ import annotations

import numpy as np

FULL_COLLECTION_CHUNK = 1 << 14
FIRST_REPEAT_CHUNK = 1 << 16


def chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    """The RNG stream for one chunk of replicates."""
    key = np.array([np.uint64(seed), np.uint64(chunk_index)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _cdf(p: np.ndarray) -> np.ndarray:
    cdf = np.cumsum(p)
    cdf[-1] = 1.0  # guard rounding so every uniform lands in a bin
    return cdf


def sample_until_full_collection(
    p: np.ndarray, reps: int, seed: int, chunk_size: int = FULL_COLLECTION_CHUNK
) -> np.ndarray:
    """Draws needed until every category has been seen, per replicate."""
    p = np.asarray(p, dtype=np.float64)
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if np.any(p <= 0):
        raise ValueError("full collection requires every probability > 0")
    cdf = _cdf(p)
    n = len(p)
    out = np.empty(reps, dtype=np.int64)
    pos = 0
    for ci in range((reps + chunk_size - 1) // chunk_size):
        m = min(chunk_size, reps - pos)
        rng = chunk_rng(seed, ci)
        seen = np.zeros((m, n), dtype=bool)
        remaining = np.full(m, n, dtype=np.int64)
        active = np.arange(m)
        res = np.empty(m, dtype=np.int64)
        draw = 0
        while active.size:
            draw += 1
            d = np.searchsorted(cdf, rng.random(active.size), side="right")
            new = ~seen[active, d]
            seen[active[new], d[new]] = True
            remaining[active[new]] -= 1
            done = remaining[active] == 0
            res[active[done]] = draw
            active = active[~done]
        out[pos : pos + m] = res
        pos += m
    return out


def sample_until_first_repeat(
    p: np.ndarray, reps: int, seed: int, chunk_size: int = FIRST_REPEAT_CHUNK
) -> np.ndarray:
    """Draws needed until any category appears twice, per replicate.

    Zero-probability categories are allowed; they simply never occur.
    """
    p = np.asarray(p, dtype=np.float64)
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if np.any(p < 0) or not np.any(p > 0):
        raise ValueError("probabilities must be non-negative with at least one > 0")
    cdf = _cdf(p)
    n = len(p)
    out = np.empty(reps, dtype=np.int64)
    pos = 0
    for ci in range((reps + chunk_size - 1) // chunk_size):
        m = min(chunk_size, reps - pos)
        rng = chunk_rng(seed, ci)
        seen = np.zeros((m, n), dtype=bool)
        active = np.arange(m)
        res = np.empty(m, dtype=np.int64)
        draw = 0
        while active.size:
            draw += 1
            d = np.searchsorted(cdf, rng.random(active.size), side="right")
            hit = seen[active, d]
            res[active[hit]] = draw
            seen[active, d] = True
            active = active[~hit]
        out[pos : pos + m] = res
        pos += m
    return out
