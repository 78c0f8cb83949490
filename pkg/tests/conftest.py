"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest

from src.ricci_signature.algebra.catalog import build_algebra, make_spec
from src.ricci_signature.config.models import Config, SearchConfig, TolerancesConfig
from src.ricci_signature.metric.core import A49Params


@pytest.fixture
def rng():
    """Seeded generator for property tests."""
    return np.random.default_rng(20240521)


@pytest.fixture
def tolerances():
    return TolerancesConfig()


@pytest.fixture
def small_search():
    """Sampling settings small enough for unit tests."""
    return SearchConfig(budget=256, chunk_size=128)


@pytest.fixture
def default_config():
    return Config()


@pytest.fixture
def su2_plus_r():
    """A3_9 + A1: su(2) with a central line."""
    return build_algebra(make_spec("A3_9+A1"))


@pytest.fixture
def heisenberg_plus_r():
    return build_algebra(make_spec("A3_1+A1"))


@pytest.fixture
def a49_params():
    """A generic canonical frame of A4_9 at beta = 1/2."""
    return A49Params(a=1.0, b=3.0, c=0.4, d=-0.7, f=2.0, beta=0.5)


def random_spd(rng, dim, delta=0.1):
    m = rng.uniform(-1.0, 1.0, size=(dim, dim))
    q = m @ m.T + delta * np.eye(dim)
    return 0.5 * (q + q.T)


@pytest.fixture
def spd_factory(rng):
    """Callable returning random SPD Gram matrices of a given dimension."""
    return lambda dim: random_spd(rng, dim)
