"""Inner products, orthonormal frames and the canonical A4_9 frames."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Union

import numpy as np

from ..algebra.structure import StructureTensor, ad_matrix, check_jacobi
from ..errors import DimensionMismatch, InvalidParams, NotPositiveDefinite

PIVOT_REL_TOL = 1e-12
GRAM_TOL = 1e-10


def _pivot_check(q: np.ndarray) -> np.ndarray:
    """Lower Cholesky factor of q, or NotPositiveDefinite if a pivot is too small."""
    n = q.shape[-1]
    floor = PIVOT_REL_TOL * float(np.trace(q)) / n
    try:
        lower = np.linalg.cholesky(q)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"Cholesky factorization failed: {e}") from e
    pivots = np.diag(lower) ** 2
    if floor <= 0.0 or np.any(pivots <= floor):
        raise NotPositiveDefinite(
            f"Cholesky pivot {float(pivots.min()):.3e} not above {floor:.3e}"
        )
    return lower


@dataclass(frozen=True)
class InnerProduct:
    """Gram matrix q_ij = <e_i, e_j> of an inner product on the algebra.

    Construction enforces exact symmetry and the Cholesky pivot test.
    """

    q: np.ndarray = field(repr=False)

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise DimensionMismatch(f"Inner product must be square, got shape {q.shape}")
        if not np.array_equal(q, q.T):
            raise NotPositiveDefinite("Inner product matrix is not symmetric")
        _pivot_check(q)
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    @property
    def dim(self) -> int:
        return self.q.shape[0]

    @classmethod
    def identity(cls, dim: int) -> "InnerProduct":
        return cls(np.eye(dim))

    @classmethod
    def from_flat(cls, values: Iterable[float], dim: int = 4) -> "InnerProduct":
        """Row-major list of dim*dim numbers (the report serialization)."""
        flat = np.asarray(list(values), dtype=float)
        if flat.size != dim * dim:
            raise DimensionMismatch(f"Expected {dim * dim} numbers, got {flat.size}")
        return cls(flat.reshape(dim, dim))

    def to_flat(self) -> List[float]:
        return [float(v) for v in self.q.ravel()]

    def cholesky(self) -> np.ndarray:
        return np.linalg.cholesky(self.q)

    def scaled(self, factor: float) -> "InnerProduct":
        return InnerProduct(self.q * factor)


@dataclass(frozen=True)
class MetricLieAlgebra:
    """Structure constants in an orthonormal frame f_j = sum_i A_ij e_i."""

    constants: StructureTensor
    frame: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.constants.dim

    def ad(self, i: int) -> np.ndarray:
        return ad_matrix(self.constants, i)


@dataclass(frozen=True)
class A49Params:
    """Coordinates (a, b, c, d, f) of an inner product on A4_9^beta in its canonical frame."""

    a: float
    b: float
    c: float
    d: float
    f: float
    beta: float

    def __post_init__(self):
        if not self.a > 0.0 or not self.b > 0.0:
            raise InvalidParams(f"Need a > 0 and b > 0, got a={self.a}, b={self.b}")
        if not -1.0 < self.beta <= 1.0:
            raise InvalidParams(f"beta={self.beta} outside (-1, 1]")

    @property
    def l(self) -> float:
        return 2.0 * self.a * (1.0 + self.beta)

    def replace(self, **changes: float) -> "A49Params":
        values = self.to_dict()
        values.update(changes)
        return A49Params(**values)

    def to_dict(self) -> Dict[str, float]:
        return {k: float(getattr(self, k)) for k in ("a", "b", "c", "d", "f", "beta")}


def orthonormal_constants(c: np.ndarray, qs: np.ndarray) -> np.ndarray:
    """
    Structure constants in the Cholesky frame of each inner product in a batch.

    With q = L L^T the frame is A = (L^T)^-1, so A^-1 = L^T and
    C'^k_ij = sum A_pi A_qj (L^T)_kr C^r_pq.

    Args:
        c: (n, n, n) structure constants in the original basis
        qs: (N, n, n) positive definite Gram matrices

    Returns:
        (N, n, n, n) constants
    """
    lower = np.linalg.cholesky(qs)
    upper = np.swapaxes(lower, -1, -2)
    frames = np.linalg.inv(upper)
    return np.einsum("npi,nqj,nkr,pqr->nijk", frames, frames, upper, c, optimize=True)


def orthonormal_frame(t: StructureTensor, q: InnerProduct) -> MetricLieAlgebra:
    """
    Express t in the orthonormal frame obtained from the Cholesky factor of q.

    Raises:
        DimensionMismatch: If q and t differ in dimension
        NotPositiveDefinite: If q fails the pivot test or the frame is not orthonormal within GRAM_TOL
    """
    if q.dim != t.dim:
        raise DimensionMismatch(f"Inner product dim {q.dim} != algebra dim {t.dim}")

    lower = q.cholesky()
    frame = np.linalg.inv(lower.T)
    constants = orthonormal_constants(t.c, q.q[np.newaxis])[0]

    gram_error = float(np.max(np.abs(frame.T @ q.q @ frame - np.eye(t.dim))))
    if gram_error > GRAM_TOL:
        raise NotPositiveDefinite(f"Orthonormal frame fails the Gram condition by {gram_error:.3e}")

    # Re-impose exact antisymmetry lost to roundoff
    constants = 0.5 * (constants - constants.transpose(1, 0, 2))
    return MetricLieAlgebra(StructureTensor(t.dim, constants), frame)


def canonical_a49(p: A49Params) -> MetricLieAlgebra:
    """
    The orthonormal frame {f_1, ..., f_4} of A4_9^beta with five free parameters.

    Nonzero constants (1-based): C^1_14 = a(1+beta), C^1_23 = b, C^1_24 = c,
    C^2_24 = a, C^1_34 = d, C^2_34 = f(1-beta), C^3_34 = a*beta.
    """
    a, beta = p.a, p.beta
    constants = StructureTensor.from_brackets(
        4,
        {
            (1, 4): {1: a * (1.0 + beta)},
            (2, 3): {1: p.b},
            (2, 4): {1: p.c, 2: a},
            (3, 4): {1: p.d, 2: p.f * (1.0 - beta), 3: a * beta},
        },
    )
    if not check_jacobi(constants):
        raise AssertionError(f"Canonical frame {p} violates the Jacobi identity")
    return MetricLieAlgebra(constants, np.eye(4))


def metric_algebra(t: StructureTensor, q: Union[InnerProduct, None] = None) -> MetricLieAlgebra:
    """Shortcut: orthonormal frame of t for q (identity when omitted)."""
    return orthonormal_frame(t, q if q is not None else InnerProduct.identity(t.dim))


def canonical_a49_batch(a, b, c, d, f, beta) -> np.ndarray:
    """(N, 4, 4, 4) canonical-frame constants for arrays of parameters (beta may be scalar)."""
    a, b, c, d, f = (np.asarray(v, dtype=float) for v in (a, b, c, d, f))
    beta = np.broadcast_to(np.asarray(beta, dtype=float), a.shape)
    out = np.zeros(a.shape + (4, 4, 4))

    def put(i, j, k, value):
        out[..., i, j, k] = value
        out[..., j, i, k] = -value

    put(0, 3, 0, a * (1.0 + beta))
    put(1, 2, 0, b)
    put(1, 3, 0, c)
    put(1, 3, 1, a)
    put(2, 3, 0, d)
    put(2, 3, 1, f * (1.0 - beta))
    put(2, 3, 2, a * beta)
    return out
