"""Seeded sampling of positive definite inner products.

Draws come from numpy's counter-based Philox generator keyed by
``SeedSequence([seed, chunk])``. Work is split into fixed-size chunks, so
any assignment of chunks to workers reproduces the same samples.
"""

from typing import Dict, Tuple

import numpy as np

from .core import InnerProduct

SPD_DELTA = 1e-3


def chunk_rng(seed: int, chunk: int, stream: int = 0) -> np.random.Generator:
    """Generator for one chunk; streams other than 0 feed secondary sampling channels."""
    key = [seed, chunk] if stream == 0 else [seed, chunk, stream]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def spd_batch(rng: np.random.Generator, count: int, dim: int, delta: float = SPD_DELTA) -> np.ndarray:
    """(count, dim, dim) matrices M M^T + delta I with M uniform in [-1, 1]."""
    m = rng.uniform(-1.0, 1.0, size=(count, dim, dim))
    q = m @ np.swapaxes(m, -1, -2) + delta * np.eye(dim)
    return 0.5 * (q + np.swapaxes(q, -1, -2))


def product_spd_batch(
    rng: np.random.Generator, count: int, dim: int, delta: float = SPD_DELTA
) -> np.ndarray:
    """Block-diagonal metrics q' (+) (s) whose last basis vector is orthogonal to the rest."""
    q = np.zeros((count, dim, dim))
    q[:, : dim - 1, : dim - 1] = spd_batch(rng, count, dim - 1, delta)
    q[:, dim - 1, dim - 1] = rng.uniform(0.1, 2.0, size=count)
    return q


def sample_spd(dim: int, seed: int, delta: float = SPD_DELTA) -> InnerProduct:
    """One seeded inner product; the same seed always gives the same matrix."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed])))
    return InnerProduct(spd_batch(rng, 1, dim, delta)[0])


def a49_param_batch(
    rng: np.random.Generator,
    count: int,
    beta_range: Tuple[float, float] = (-1.0, 1.0),
    spread: float = 2.0,
) -> Dict[str, np.ndarray]:
    """
    Random canonical-frame parameters.

    a and b are uniform in [0.1, spread], c, d, f in [-spread, spread], and
    beta in the half-open interval (lo, hi].
    """
    lo, hi = beta_range
    return {
        "a": rng.uniform(0.1, spread, count),
        "b": rng.uniform(0.1, spread, count),
        "c": rng.uniform(-spread, spread, count),
        "d": rng.uniform(-spread, spread, count),
        "f": rng.uniform(-spread, spread, count),
        # uniform() is [lo, hi); reflect to get (lo, hi]
        "beta": lo + hi - rng.uniform(lo, hi, count),
    }
