"""Metric Lie algebras: inner products, orthonormal frames, sampling."""

from ..algebra.structure import ad_matrix
from .core import (
    A49Params,
    InnerProduct,
    MetricLieAlgebra,
    canonical_a49,
    canonical_a49_batch,
    metric_algebra,
    orthonormal_constants,
    orthonormal_frame,
)
from .sampling import (
    SPD_DELTA,
    a49_param_batch,
    chunk_rng,
    product_spd_batch,
    sample_spd,
    spd_batch,
)

__all__ = [
    "A49Params",
    "InnerProduct",
    "MetricLieAlgebra",
    "SPD_DELTA",
    "a49_param_batch",
    "ad_matrix",
    "canonical_a49",
    "canonical_a49_batch",
    "chunk_rng",
    "metric_algebra",
    "orthonormal_constants",
    "orthonormal_frame",
    "product_spd_batch",
    "sample_spd",
    "spd_batch",
]
