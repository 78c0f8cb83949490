"""Curvature of left-invariant metrics."""

from .ricci import (
    RicciData,
    killing_batch,
    killing_operator,
    mean_curvature_batch,
    mean_curvature_vector,
    milnor_ricci,
    ric_scale,
    ricci_batch,
    ricci_from_matrix,
    ricci_matrix,
    ricci_operator,
    scalar_curvature,
)

__all__ = [
    "RicciData",
    "killing_batch",
    "killing_operator",
    "mean_curvature_batch",
    "mean_curvature_vector",
    "milnor_ricci",
    "ric_scale",
    "ricci_batch",
    "ricci_from_matrix",
    "ricci_matrix",
    "ricci_operator",
    "scalar_curvature",
]
