"""Ricci operator of a metric Lie algebra.

In an orthonormal frame, with ad_i = ad(f_i) and the metric adjoint equal
to the transpose:

    Ric = -1/2 sum ad_i^T ad_i + 1/4 sum ad_i ad_i^T - 1/2 B - (ad_H)^s

where B_ij = tr(ad_i ad_j) is the Killing form, H_i = tr(ad_i) is the
mean-curvature vector and (ad_H)^s is the symmetric part of ad_H.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..metric.core import MetricLieAlgebra
from ..signature.classify import ZERO_REL_TOL, SignatureTuple, classify, signature_index
from ..signature.eigen import sym_eigenvalues

logger = logging.getLogger(__name__)

SYMMETRY_REL_TOL = 1e-12


@dataclass(frozen=True)
class RicciData:
    """Ricci operator with its sorted spectrum, signature and scalar curvature."""

    ric: np.ndarray = field(repr=False)
    eigenvalues: np.ndarray
    signature: SignatureTuple
    scalar: float

    @property
    def scale(self) -> float:
        return ric_scale(self.ric)

    @property
    def index(self) -> Optional[int]:
        return signature_index(self.signature) if len(self.signature) == 4 else None


def ric_scale(ric: np.ndarray) -> float:
    """||Ric||_inf, the size used for zero thresholds."""
    return float(np.linalg.norm(ric, np.inf))


def _ads(constants: np.ndarray) -> np.ndarray:
    # (..., i, j, k) constants -> (..., i, k, j) stack of ad(f_i)
    return np.swapaxes(constants, -1, -2)


def killing_batch(constants: np.ndarray) -> np.ndarray:
    ads = _ads(constants)
    return np.einsum("...ijk,...lkj->...il", ads, ads)


def mean_curvature_batch(constants: np.ndarray) -> np.ndarray:
    return np.einsum("...ikk->...i", _ads(constants))


def ricci_batch(constants: np.ndarray) -> np.ndarray:
    """
    Ricci matrices for a stack of orthonormal-frame constants.

    Args:
        constants: (..., n, n, n) structure constants c[i, j, k] = C^k_ij

    Returns:
        (..., n, n) symmetrized Ricci operators
    """
    ads = _ads(constants)
    adt_ad = np.einsum("...ikj,...ikl->...jl", ads, ads)
    ad_adt = np.einsum("...ijk,...ilk->...jl", ads, ads)
    killing = np.einsum("...ijk,...lkj->...il", ads, ads)
    h = np.einsum("...ikk->...i", ads)
    ad_h = np.einsum("...i,...ijk->...jk", h, ads)

    ric = -0.5 * adt_ad + 0.25 * ad_adt - 0.5 * killing - 0.5 * (ad_h + np.swapaxes(ad_h, -1, -2))
    return 0.5 * (ric + np.swapaxes(ric, -1, -2))


def killing_operator(m: MetricLieAlgebra) -> np.ndarray:
    """B_ij = trace(ad f_i . ad f_j)."""
    return killing_batch(m.constants.c)


def mean_curvature_vector(m: MetricLieAlgebra) -> np.ndarray:
    """H_i = trace(ad f_i); zero exactly when the algebra is unimodular."""
    return mean_curvature_batch(m.constants.c)


def ricci_matrix(m: MetricLieAlgebra) -> np.ndarray:
    return ricci_batch(m.constants.c)


def ricci_from_matrix(ric: np.ndarray, zero_rel: float = ZERO_REL_TOL) -> RicciData:
    """Eigenvalues, signature and scalar curvature of a symmetric Ricci matrix."""
    ric = np.asarray(ric, dtype=float)
    asym = float(np.max(np.abs(ric - ric.T), initial=0.0))
    if asym > SYMMETRY_REL_TOL * (1.0 + ric_scale(ric)):
        logger.warning("Ricci matrix asymmetric by %.3e before symmetrization", asym)
    ric = 0.5 * (ric + ric.T)

    eigs = sym_eigenvalues(ric)
    scalar = float(np.trace(ric))
    return RicciData(ric, eigs, classify(eigs, ric_scale(ric), zero_rel), scalar)


def ricci_operator(m: MetricLieAlgebra, zero_rel: float = ZERO_REL_TOL) -> RicciData:
    """Ricci operator, spectrum and signature of m in its orthonormal frame."""
    return ricci_from_matrix(ricci_matrix(m), zero_rel)


def scalar_curvature(m: MetricLieAlgebra) -> float:
    return float(np.trace(ricci_matrix(m)))


def milnor_ricci(l1: float, l2: float, l3: float) -> np.ndarray:
    """
    Diagonal Ricci operator of the unimodular 3-dimensional Milnor frame.

    [e2, e3] = l1 e1, [e3, e1] = l2 e2, [e1, e2] = l3 e3 gives
    Ric(e_i) = 2 mu_j mu_k e_i with mu_i = (l1 + l2 + l3)/2 - l_i.
    """
    lam = np.array([l1, l2, l3], dtype=float)
    mu = 0.5 * lam.sum() - lam
    return np.diag(2.0 * np.array([mu[1] * mu[2], mu[0] * mu[2], mu[0] * mu[1]]))
