"""Closed-form Ricci data of A4_9^beta in its canonical frame.

Every function here evaluates a printed formula for the family; the
conformance suite compares them against the general curvature engine.
Parameters follow A49Params: a > 0, b > 0, c, d, f real, -1 < beta <= 1.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import InvalidArgument, InvalidParams
from ..metric.core import A49Params
from ..signature.eigen import sym_eigenvalues

logger = logging.getLogger(__name__)

BIG_F_DOUBLINGS = 60


def explicit_ric_a49(p: A49Params) -> np.ndarray:
    """Ricci operator of canonical_a49(p), written out entry by entry."""
    a, b, c, d, f, beta = p.a, p.b, p.c, p.d, p.f, p.beta
    g = f * (1.0 - beta)
    l = p.l
    r = 4.0 * a * a * (beta * beta + beta + 1.0) + c * c + d * d + g * g

    m11 = b * b + c * c + d * d - 4.0 * a * a * (1.0 + beta) ** 2
    m12 = -a * c * beta + d * g - c * l
    m13 = -d * (a + l)
    m22 = -2.0 * a * l - b * b - c * c + g * g
    m23 = -c * d - a * f * (1.0 - beta) ** 2 - f * l * (1.0 - beta)
    m24 = b * d
    m33 = -4.0 * a * a * beta * (1.0 + beta) - b * b - d * d - g * g
    m34 = -b * c

    twice = np.array(
        [
            [m11, m12, m13, 0.0],
            [m12, m22, m23, m24],
            [m13, m23, m33, m34],
            [0.0, m24, m34, -r],
        ]
    )
    return 0.5 * twice


def _minor(m: np.ndarray, *deleted: int) -> np.ndarray:
    """Submatrix with the given 1-based rows and columns removed."""
    keep = [i for i in range(m.shape[0]) if i + 1 not in deleted]
    return m[np.ix_(keep, keep)]


def det_submatrix_identity(p: A49Params) -> Tuple[float, float]:
    """
    Both sides of 4(det Ric_{1,2} + det Ric_{1,3}) = polynomial(a, b, c, d, f, beta).

    The right side is positive, so Ric never has more than two nonnegative
    eigenvalues on this family.
    """
    ric = explicit_ric_a49(p)
    lhs = 4.0 * (np.linalg.det(_minor(ric, 1, 2)) + np.linalg.det(_minor(ric, 1, 3)))

    a, b, c, d, f, beta = p.a, p.b, p.c, p.d, p.f, p.beta
    q = beta * beta + beta + 1.0
    fb2 = f * f * (beta - 1.0) ** 2
    rhs = (
        16.0 * (1.0 + beta) ** 2 * q * a**4
        + (
            8.0 * q * b * b
            + 4.0 * (3.0 * beta + 2.0 + 2.0 * beta * beta) * (c * c + d * d)
            + 4.0 * f * f * (beta * beta - 1.0) ** 2
        ) * a * a
        + c**4
        + d**4
        + (2.0 * fb2 + c * c + d * d) * b * b
        + (fb2 + 2.0 * d * d) * c * c
        + fb2 * d * d
    )
    return float(lhs), float(rhs)


def _quartic_constant(beta: float, f: float, tail: float) -> float:
    # Constant term of the quadratic factor shared by the b = 2(1+beta) and b = 3(1+beta) cases
    return -((1.0 - beta) ** 4) * f**4 - (5.0 * beta * beta + 6.0 * beta + 5.0) * (1.0 - beta) ** 2 * f * f + tail


def charpoly_case_b2(beta: float, f: float) -> np.ndarray:
    """Characteristic polynomial of 2 Ric at a = 1, b = 2(1+beta), c = d = 0 (highest degree first)."""
    q = beta * beta + beta + 1.0
    tail = 16.0 * (2.0 + beta) * (1.0 + 2.0 * beta) * (1.0 + beta) ** 2
    quad = [1.0, 12.0 * (1.0 + beta) ** 2, _quartic_constant(beta, f, tail)]
    linear = [1.0, 4.0 * q + f * f * (beta - 1.0) ** 2]
    return np.polymul(np.polymul([1.0, 0.0], linear), quad)


def charpoly_case_b3(beta: float, f: float) -> np.ndarray:
    """Characteristic polynomial of 2 Ric at a = 1, b = 3(1+beta), c = d = 0."""
    q = beta * beta + beta + 1.0
    tail = (9.0 * beta + 13.0) * (13.0 * beta + 9.0) * (beta + 1.0) ** 2
    quad = [1.0, 22.0 * (1.0 + beta) ** 2, _quartic_constant(beta, f, tail)]
    linear = [1.0, 4.0 * q + f * f * (1.0 - beta) ** 2]
    root = [1.0, -5.0 * (1.0 + beta) ** 2]
    return np.polymul(np.polymul(root, linear), quad)


def charpoly_case_ab1(beta: float) -> np.ndarray:
    """Characteristic polynomial of 2 Ric at a = b = 1, c = d = f = 0; all roots negative for beta > -1/2."""
    factors = [
        [1.0, (2.0 * beta + 3.0) * (2.0 * beta + 1.0)],
        [1.0, 4.0 * (beta * beta + beta + 1.0)],
        [1.0, (2.0 * beta + 1.0) ** 2],
        [1.0, 5.0 + 4.0 * beta],
    ]
    poly = np.array([1.0])
    for factor in factors:
        poly = np.polymul(poly, factor)
    return poly


def case_params(case: str, beta: float, f: float = 0.0) -> A49Params:
    """Parameter points of the three factorized cases: 'b2', 'b3' or 'ab1'."""
    if case == "b2":
        return A49Params(a=1.0, b=2.0 * (1.0 + beta), c=0.0, d=0.0, f=f, beta=beta)
    if case == "b3":
        return A49Params(a=1.0, b=3.0 * (1.0 + beta), c=0.0, d=0.0, f=f, beta=beta)
    if case == "ab1":
        return A49Params(a=1.0, b=1.0, c=0.0, d=0.0, f=0.0, beta=beta)
    raise InvalidArgument(f"Unknown case '{case}'")


def eigen_charpoly(ric: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial of 2 Ric rebuilt from its eigenvalues."""
    return np.poly(sym_eigenvalues(2.0 * ric))


def big_f(p: A49Params, tail: float) -> float:
    """
    A value of f large enough for the quartic factor's constant term to be negative.

    Starts at 10(1 + a + b) and doubles; tail is the f-free part of the constant.
    """
    f = 10.0 * (1.0 + p.a + p.b)
    for _ in range(BIG_F_DOUBLINGS):
        if _quartic_constant(p.beta, f, tail) < 0.0:
            return f
        f *= 2.0
    raise ArithmeticError(f"No f up to {f:.3e} makes the constant term negative at beta={p.beta}")


def case_tail(case: str, beta: float) -> float:
    if case == "b2":
        return 16.0 * (2.0 + beta) * (1.0 + 2.0 * beta) * (1.0 + beta) ** 2
    if case == "b3":
        return (9.0 * beta + 13.0) * (13.0 * beta + 9.0) * (beta + 1.0) ** 2
    raise InvalidArgument(f"Case '{case}' has no quartic factor")


@dataclass(frozen=True)
class LemmaTwoFrame:
    """Rotation angle t with parameters at beta in (-1, -1/2]."""

    t: float
    params: A49Params

    @property
    def beta(self) -> float:
        return self.params.beta

    def d_matrix(self) -> np.ndarray:
        """D(t) = Q(t) D Q(t)^T with D = diag(-3b, -1-2b, 1-b, 0) and Q rotating coordinates 2-3."""
        beta = self.beta
        d = np.diag([-3.0 * beta, -1.0 - 2.0 * beta, 1.0 - beta, 0.0])
        cos_t, sin_t = math.cos(self.t), math.sin(self.t)
        q = np.eye(4)
        q[1:3, 1:3] = [[cos_t, sin_t], [-sin_t, cos_t]]
        return q @ d @ q.T


def lemma2_h1(fr: LemmaTwoFrame) -> float:
    p, t = fr.params, fr.t
    return (2.0 + p.beta) * (math.cos(t) * p.c - math.sin(t) * p.d) ** 2 - (1.0 + 2.0 * p.beta) * (
        p.c * p.c + p.d * p.d
    )


def lemma2_h2(fr: LemmaTwoFrame) -> float:
    p, t = fr.params, fr.t
    a, f, beta = p.a, p.f, p.beta
    return (
        4.0 * (1.0 + beta) * ((5.0 - math.cos(t) ** 2) * beta * (1.0 + beta) + math.cos(2.0 * t)) * a * a
        - math.sin(2.0 * t) * (1.0 - beta) * (3.0 + beta) * (2.0 + beta) * a * f
        - (2.0 + beta) * (1.0 - beta) ** 2 * math.cos(2.0 * t) * f * f
    )


def lemma2_decomposition(fr: LemmaTwoFrame) -> Tuple[float, float, float]:
    """(2 trace(Ric D(t)), h1(t), h2(t)); the first equals the sum of the others."""
    lhs = 2.0 * float(np.trace(explicit_ric_a49(fr.params) @ fr.d_matrix()))
    return lhs, lemma2_h1(fr), lemma2_h2(fr)


def lemma2_t0(p: A49Params) -> float:
    """Angle with a sin 2t + f cos 2t = 0 and cos 2t > 0."""
    return -0.5 * math.atan(p.f / p.a)


def lemma2_h2_closed(p: A49Params, t0: float) -> float:
    """h2 at the critical angle: 4a^2(1+beta)((9cos^2 t0 - 5) beta(1+beta) + 1) / cos 2t0."""
    beta = p.beta
    return (
        4.0 * p.a * p.a * (1.0 + beta)
        * ((9.0 * math.cos(t0) ** 2 - 5.0) * beta * (1.0 + beta) + 1.0)
        / math.cos(2.0 * t0)
    )


def lemma2_t0_certificate(p: A49Params) -> float:
    """
    h1(t0) + h2(t0) = 2 trace(Ric D(t0)) for beta in (-1, -1/2).

    A positive value means Ric is not negative semidefinite, so it has a
    positive eigenvalue.
    """
    if not -1.0 < p.beta < -0.5:
        raise InvalidParams(f"Certificate needs beta in (-1, -1/2), got {p.beta}")
    fr = LemmaTwoFrame(lemma2_t0(p), p)
    value = lemma2_h1(fr) + lemma2_h2(fr)
    if value <= 0.0:
        logger.warning("Non-positive certificate %.3e at %s", value, p)
    return value


def beta_half_blocks(a: float, b: float, d: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    2 Ric at beta = -1/2, c = f = 0 splits into coordinates (1, 3) and (2, 4).

    Returns:
        (block1, block2): block1 has zero trace, block2 is negative definite
    """
    block1 = np.array([[b * b + d * d - a * a, -2.0 * a * d], [-2.0 * a * d, a * a - b * b - d * d]])
    block2 = np.array([[-b * b - 2.0 * a * a, b * d], [b * d, -3.0 * a * a - d * d]])
    return block1, block2


def assemble_beta_half(block1: np.ndarray, block2: np.ndarray) -> np.ndarray:
    """Ric from the two blocks of 2 Ric."""
    twice = np.zeros((4, 4))
    twice[np.ix_([0, 2], [0, 2])] = block1
    twice[np.ix_([1, 3], [1, 3])] = block2
    return 0.5 * twice


@dataclass(frozen=True)
class OpenBlocks:
    """2 Ric at b = 2a, c = d = 0: block on coordinates (2, 3) plus two diagonal entries."""

    block: np.ndarray
    outer: Tuple[float, float]

    def assemble(self) -> np.ndarray:
        twice = np.zeros((4, 4))
        twice[0, 0] = self.outer[0]
        twice[1:3, 1:3] = self.block
        twice[3, 3] = self.outer[1]
        return 0.5 * twice


def neg_half_open_blocks(a: float, f: float, beta: float) -> OpenBlocks:
    g2 = (f * (1.0 - beta)) ** 2
    off = -a * f * (3.0 + beta) * (1.0 - beta)
    block = np.array(
        [
            [-4.0 * a * a * (2.0 + beta) + g2, off],
            [off, -4.0 * a * a * (1.0 + beta + beta * beta) - g2],
        ]
    )
    outer = (
        -4.0 * a * a * beta * (2.0 + beta),
        -4.0 * a * a * (1.0 + beta + beta * beta) - g2,
    )
    return OpenBlocks(block, outer)


def open_block_trace(a: float, beta: float) -> float:
    return -4.0 * a * a * (3.0 + 2.0 * beta + beta * beta)


def open_block_det(a: float, f: float, beta: float) -> float:
    """det of the (2, 3) block; positive at f = 0 and negative for large f."""
    return (
        -((1.0 - beta) ** 4) * f**4
        - a * a * (5.0 * beta * beta + 6.0 * beta + 5.0) * (1.0 - beta) ** 2 * f * f
        + 16.0 * a**4 * (2.0 + beta) * (1.0 + beta + beta * beta)
    )


def open_blocks_big_f(a: float, beta: float) -> float:
    """Doubling search for f with negative block determinant."""
    f = 10.0 * (1.0 + a + 2.0 * a)
    for _ in range(BIG_F_DOUBLINGS):
        if open_block_det(a, f, beta) < 0.0:
            return f
        f *= 2.0
    raise ArithmeticError(f"No f up to {f:.3e} makes det(A) negative at beta={beta}")


def beta1_submatrix_check(a: float, b: float, c: float, d: float) -> bool:
    """At beta = 1, Ric without its first row and column is negative definite."""
    ric = explicit_ric_a49(A49Params(a=a, b=b, c=c, d=d, f=0.0, beta=1.0))
    return bool(np.all(sym_eigenvalues(_minor(ric, 1)) < 0.0))
