"""Cyclic Jacobi eigensolver for small symmetric matrices.

Rotations are applied to a whole stack of matrices at once with a fixed
(p, q) sweep order, so a chunk of samples is diagonalized with exactly the
same sequence of operations whatever its batch size.
"""

import logging

import numpy as np

from ..errors import DimensionMismatch, NoConvergence

logger = logging.getLogger(__name__)

MAX_SWEEPS = 100
OFF_REL_TOL = 1e-13
SKIP_REL_TOL = 1e-18
SYMMETRY_REL_TOL = 1e-9


def _off_norm(a: np.ndarray) -> np.ndarray:
    # Summed directly: total minus diagonal cancels to ~sqrt(eps)*norm near convergence
    off = a * (1.0 - np.eye(a.shape[1]))
    return np.sqrt(np.sum(off * off, axis=(1, 2)))


def jacobi_eigenvalues(mats: np.ndarray) -> np.ndarray:
    """
    Ascending eigenvalues of a stack of symmetric matrices.

    Args:
        mats: (N, n, n) or (n, n) array, symmetric up to roundoff

    Returns:
        (N, n) or (n,) sorted eigenvalues of the symmetrized input

    Raises:
        DimensionMismatch: If matrices are not square
        NoConvergence: If any matrix is not diagonal after MAX_SWEEPS sweeps
    """
    a = np.array(mats, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[np.newaxis]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise DimensionMismatch(f"Expected square matrices, got shape {np.shape(mats)}")

    asym = np.max(np.abs(a - np.swapaxes(a, 1, 2)), initial=0.0)
    if asym > SYMMETRY_REL_TOL * max(1.0, float(np.max(np.abs(a), initial=0.0))):
        logger.warning("Eigensolver input asymmetric by %.3e", asym)

    a = 0.5 * (a + np.swapaxes(a, 1, 2))
    n = a.shape[1]
    norm = np.linalg.norm(a, axis=(1, 2))
    target = OFF_REL_TOL * norm
    skip = SKIP_REL_TOL * norm

    for sweep in range(MAX_SWEEPS + 1):
        active = _off_norm(a) > target
        if not np.any(active):
            break
        if sweep == MAX_SWEEPS:
            raise NoConvergence(
                f"Jacobi eigensolver: {int(active.sum())} matrices not diagonal after {MAX_SWEEPS} sweeps"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                rotate = active & (np.abs(apq) > skip)
                if not np.any(rotate):
                    continue
                denom = np.where(rotate, 2.0 * apq, 1.0)
                theta = (a[:, q, q] - a[:, p, p]) / denom
                t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
                c = np.where(rotate, 1.0 / np.sqrt(1.0 + t * t), 1.0)
                s = np.where(rotate, t * c, 0.0)

                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * col_p - s[:, None] * col_q
                a[:, :, q] = s[:, None] * col_p + c[:, None] * col_q

                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * row_p - s[:, None] * row_q
                a[:, q, :] = s[:, None] * row_p + c[:, None] * row_q

                a[:, p, q] = np.where(rotate, 0.0, a[:, p, q])
                a[:, q, p] = a[:, p, q]

    eigs = np.sort(np.einsum("nii->ni", a), axis=1)
    return eigs[0] if single else eigs


def sym_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of one symmetric matrix."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise DimensionMismatch(f"Expected a matrix, got shape {m.shape}")
    return jacobi_eigenvalues(m)
