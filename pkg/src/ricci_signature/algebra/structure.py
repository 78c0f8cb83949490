"""Structure constants of finite-dimensional real Lie algebras.

Basis indices are 1-based in documentation and file formats and 0-based
in arrays: e_1 lives at index 0.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import numpy as np

from ..errors import DimensionMismatch, IndexOutOfRange, InvalidAlgebraDefinition

logger = logging.getLogger(__name__)

JACOBI_REL_TOL = 1e-12
TRACE_TOL = 1e-12

# {(i, j): {k: value}} with 1-based indices, i < j
BracketTable = Mapping[Tuple[int, int], Mapping[int, float]]


@dataclass(frozen=True)
class StructureTensor:
    """Bracket coefficients c[i, j, k] = C^k_{ij}, i.e. [e_i, e_j] = sum_k C^k_{ij} e_k.

    Attributes:
        dim: Basis size
        c: Read-only (dim, dim, dim) float array, antisymmetric in (i, j)
    """

    dim: int
    c: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        if c.shape != (self.dim, self.dim, self.dim):
            raise DimensionMismatch(
                f"Structure tensor shape {c.shape} does not match dim={self.dim}"
            )
        if not np.array_equal(c, -c.transpose(1, 0, 2)):
            raise InvalidAlgebraDefinition("Structure constants are not antisymmetric")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @classmethod
    def zeros(cls, dim: int) -> "StructureTensor":
        return cls(dim, np.zeros((dim, dim, dim)))

    @classmethod
    def from_brackets(cls, dim: int, brackets: BracketTable) -> "StructureTensor":
        """Build a tensor from the nonzero relations [e_i, e_j] = sum_k v_k e_k.

        Args:
            dim: Basis size
            brackets: 1-based table {(i, j): {k: v_k}}; mirrors are filled in

        Returns:
            StructureTensor with exact antisymmetric mirrors
        """
        c = np.zeros((dim, dim, dim))
        for (i, j), out in brackets.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise IndexOutOfRange(f"Bracket [e{i}, e{j}] outside dim={dim}")
            if i == j:
                raise InvalidAlgebraDefinition(f"[e{i}, e{i}] must vanish")
            for k, value in out.items():
                if not 1 <= k <= dim:
                    raise IndexOutOfRange(f"Output e{k} outside dim={dim}")
                c[i - 1, j - 1, k - 1] = float(value)
                c[j - 1, i - 1, k - 1] = -float(value)
        return cls(dim, c)

    def nonzero_brackets(self) -> Dict[Tuple[int, int], Dict[int, float]]:
        """1-based table of nonzero relations with i < j."""
        table: Dict[Tuple[int, int], Dict[int, float]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                out = {k + 1: float(v) for k, v in enumerate(self.c[i, j]) if v != 0.0}
                if out:
                    table[(i + 1, j + 1)] = out
        return table


def jacobi_residual(t: StructureTensor) -> np.ndarray:
    """Cyclic Jacobi sum R[i, j, l, m] = sum_k (C^k_ij C^m_kl + C^k_jl C^m_ki + C^k_li C^m_kj)."""
    c = t.c
    return (
        np.einsum("ijk,klm->ijlm", c, c)
        + np.einsum("jlk,kim->ijlm", c, c)
        + np.einsum("lik,kjm->ijlm", c, c)
    )


def check_jacobi(t: StructureTensor, rel_tol: float = JACOBI_REL_TOL) -> bool:
    """True iff the Jacobi residual vanishes within rel_tol * (1 + max|C|^2)."""
    if t.dim == 0 or not np.any(t.c):
        return True
    scale = 1.0 + float(np.max(np.abs(t.c))) ** 2
    worst = float(np.max(np.abs(jacobi_residual(t))))
    if worst > rel_tol * scale:
        logger.debug("Jacobi residual %.3e exceeds %.3e", worst, rel_tol * scale)
        return False
    return True


def ad_traces(t: StructureTensor) -> np.ndarray:
    """trace ad(e_i) = sum_k C^k_{ik} for every basis vector."""
    return np.einsum("ikk->i", t.c)


def is_unimodular(t: StructureTensor, tol: float = TRACE_TOL) -> bool:
    """True iff trace ad(e_i) vanishes for every basis vector."""
    return bool(np.all(np.abs(ad_traces(t)) <= tol))


def bracket(t: StructureTensor, x, y) -> np.ndarray:
    """[x, y]_k = sum_ij x_i y_j C^k_ij for coefficient vectors x, y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (t.dim,) or y.shape != (t.dim,):
        raise DimensionMismatch(
            f"Expected vectors of length {t.dim}, got {x.shape} and {y.shape}"
        )
    return np.einsum("i,j,ijk->k", x, y, t.c)


def ad_matrix(t: StructureTensor, i: int) -> np.ndarray:
    """Matrix of ad(e_i) (0-based i): column j holds [e_i, e_j], so (ad e_i)_{kj} = C^k_{ij}."""
    if not 0 <= i < t.dim:
        raise IndexOutOfRange(f"Basis index {i} outside 0..{t.dim - 1}")
    return np.array(t.c[i].T)


def ad_matrices(t: StructureTensor) -> np.ndarray:
    """Stack of all ad(e_i), shape (dim, dim, dim)."""
    return np.transpose(t.c, (0, 2, 1)).copy()
