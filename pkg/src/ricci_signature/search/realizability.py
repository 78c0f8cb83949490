"""Realizability search: which signatures does an algebra's Ricci operator attain?

Raw channel: seeded positive definite Gram matrices on the catalog basis,
chunked so that chunk k always sees the same draws. Sample 0 is the
identity. Algebras with an abelian direct factor also get block-diagonal
(product) metrics, whose factor direction is an exact zero eigenvector.
A4_9 additionally gets random canonical-frame parameters.

Zero-containing signatures are only recorded when every zero is structural
(roundoff-sized); anything else near zero is dropped.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.catalog import Family, LieAlgebraSpec, build_algebra, has_abelian_factor
from ..algebra.structure import StructureTensor, is_unimodular
from ..config.models import SearchConfig, TolerancesConfig
from ..curvature.ricci import RicciData, ric_scale, ricci_batch, ricci_from_matrix, ricci_matrix
from ..errors import InvalidArgument, NoConvergence, NoSignChange, NotNonUnimodular
from ..metric.core import (
    A49Params,
    InnerProduct,
    MetricLieAlgebra,
    canonical_a49,
    canonical_a49_batch,
    orthonormal_constants,
    orthonormal_frame,
)
from ..metric.sampling import a49_param_batch, chunk_rng, product_spd_batch, spd_batch
from ..signature.classify import (
    SignatureTuple,
    index_codes,
    sign_codes,
    signature_from_index,
    signature_index,
)
from ..signature.eigen import jacobi_eigenvalues, sym_eigenvalues
from .models import SearchReport, Witness

logger = logging.getLogger(__name__)

MAX_BISECT_ITERATIONS = 200
CANONICAL_STREAM = 1


@dataclass
class Batch:
    """Evaluated samples of one chunk."""

    start: int
    ric: np.ndarray
    eigs: np.ndarray
    scales: np.ndarray
    sources: np.ndarray
    qs: Optional[np.ndarray] = None
    params: Optional[Dict[str, np.ndarray]] = None


def _chunks(budget: int, chunk_size: int) -> List[Tuple[int, int]]:
    """(chunk index, sample count) pairs covering the budget."""
    n_chunks = math.ceil(budget / chunk_size)
    return [(k, min(chunk_size, budget - k * chunk_size)) for k in range(n_chunks)]


def _evaluate(constants: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    ric = ricci_batch(constants)
    eigs = jacobi_eigenvalues(ric)
    scales = np.linalg.norm(ric, np.inf, axis=(1, 2))
    return ric, eigs, scales


def raw_chunk(
    tensor: StructureTensor, seed: int, chunk: int, count: int, product: bool, search: SearchConfig
) -> Batch:
    rng = chunk_rng(seed, chunk)
    dim = tensor.dim
    qs = spd_batch(rng, count, dim, search.spd_delta)
    sources = np.full(count, "random", dtype=object)
    if product:
        n_prod = int(round(count * search.product_fraction))
        if n_prod:
            qs[:n_prod] = product_spd_batch(rng, n_prod, dim, search.spd_delta)
            sources[:n_prod] = "product"
    if chunk == 0:
        qs[0] = np.eye(dim)
        sources[0] = "identity"

    ric, eigs, scales = _evaluate(orthonormal_constants(tensor.c, qs))
    return Batch(chunk * search.chunk_size, ric, eigs, scales, sources, qs=qs)


def canonical_chunk(beta: float, seed: int, chunk: int, count: int, search: SearchConfig) -> Batch:
    rng = chunk_rng(seed, chunk, CANONICAL_STREAM)
    params = a49_param_batch(rng, count)
    params["beta"] = np.full(count, beta)
    constants = canonical_a49_batch(
        params["a"], params["b"], params["c"], params["d"], params["f"], beta
    )
    ric, eigs, scales = _evaluate(constants)
    sources = np.full(count, "canonical", dtype=object)
    return Batch(chunk * search.chunk_size, ric, eigs, scales, sources, params=params)


def accepted_indices(batch: Batch, tolerances: TolerancesConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Taxonomy index per sample and a mask of samples whose zeros are all structural."""
    codes = sign_codes(batch.eigs, batch.scales, tolerances.zero_rel)
    floor = tolerances.structural_rel * np.maximum(1.0, batch.scales)[:, None]
    ok = np.all((codes != 0) | (np.abs(batch.eigs) <= floor), axis=1)
    return index_codes(codes), ok


def _witness(batch: Batch, row: int, idx: int) -> Witness:
    witness = Witness(
        index=int(idx),
        signature=str(signature_from_index(int(idx))),
        source=str(batch.sources[row]),
        eigenvalues=[float(v) for v in batch.eigs[row]],
        sample=batch.start + row,
    )
    if batch.qs is not None:
        witness.q = [float(v) for v in batch.qs[row].ravel()]
    if batch.params is not None:
        witness.a49 = {k: float(v[row]) for k, v in batch.params.items()}
    return witness


def first_witnesses(batch: Batch, tolerances: TolerancesConfig) -> Dict[int, Witness]:
    indices, ok = accepted_indices(batch, tolerances)
    found: Dict[int, Witness] = {}
    for row in np.flatnonzero(ok):
        idx = int(indices[row])
        if idx not in found:
            found[idx] = _witness(batch, row, idx)
    return found


def _run_chunks(jobs: Sequence[Callable[[], Batch]], workers: int) -> List[Batch]:
    # Results come back in submission order whatever the scheduling
    if workers <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: job(), jobs))


def sample_batches(
    spec: LieAlgebraSpec,
    budget: int,
    seed: int,
    search: SearchConfig,
) -> List[Batch]:
    """All evaluated batches for an algebra: raw channel, then the canonical channel for A4_9."""
    tensor = build_algebra(spec)
    product = has_abelian_factor(spec)
    jobs: List[Callable[[], Batch]] = [
        (lambda k=k, n=n: raw_chunk(tensor, seed, k, n, product, search))
        for k, n in _chunks(budget, search.chunk_size)
    ]
    if spec.family == Family.A4_9:
        beta = spec.params["beta"]
        jobs += [
            (lambda k=k, n=n: canonical_chunk(beta, seed, k, n, search))
            for k, n in _chunks(budget, search.chunk_size)
        ]
    return _run_chunks(jobs, search.workers)


def realizability_search(
    spec: LieAlgebraSpec,
    budget: int,
    seed: int,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
) -> SearchReport:
    """
    Record the first witness of every signature hit by seeded sampling.

    Args:
        spec: Catalog algebra
        budget: Samples per channel
        seed: Sampler seed
        search: Sampling settings (defaults when omitted)
        tolerances: Zero thresholds (defaults when omitted)

    Returns:
        SearchReport, deterministic in (spec, budget, seed)
    """
    if budget < 1:
        raise InvalidArgument(f"budget must be >= 1, got {budget}")
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()

    batches = sample_batches(spec, budget, seed, search)
    found: Dict[int, Witness] = {}
    for batch in batches:
        for idx, witness in first_witnesses(batch, tolerances).items():
            found.setdefault(idx, witness)

    samples = sum(len(b.eigs) for b in batches)
    logger.info(
        "%s: %d samples, signatures %s", spec.label, samples, sorted(found)
    )
    return SearchReport(
        algebra=spec,
        found=dict(sorted(found.items())),
        samples_used=samples,
        seed=seed,
    )


def replay_witness(tensor: StructureTensor, witness: Witness, zero_rel: float = 1e-9) -> RicciData:
    """Recompute the Ricci data a witness claims."""
    if witness.a49 is not None:
        return ricci_from_matrix(ricci_matrix(canonical_a49(A49Params(**witness.a49))), zero_rel)
    if witness.q is None:
        raise InvalidArgument(f"Witness for signature {witness.index} carries no metric")
    q = InnerProduct.from_flat(witness.q, tensor.dim)
    return ricci_from_matrix(ricci_matrix(orthonormal_frame(tensor, q)), zero_rel)


def zero_crossing_bisect(
    curve: Callable[[float], MetricLieAlgebra],
    eig_index: int,
    lo: float,
    hi: float,
    deflate: Sequence[int] = (),
    bisect_rel: float = 1e-10,
    zero_rel: float = 1e-9,
) -> Tuple[float, RicciData]:
    """
    Bisect a one-parameter family of metrics on the sign of one eigenvalue.

    Args:
        curve: t -> metric Lie algebra
        eig_index: Position (0-based, ascending) of the tracked eigenvalue
        lo, hi: Bracketing parameter values
        deflate: 0-based frame indices removed before tracking (exact
            eigenvectors whose eigenvalue would otherwise share the position)
        bisect_rel: Stop when |lambda| <= bisect_rel * ||Ric||_inf

    Returns:
        (t*, RicciData at t*)

    Raises:
        NoSignChange: Tracked eigenvalue has the same sign at both ends
        NoConvergence: Interval exhausted or iteration cap reached
    """
    def tracked(t: float) -> Tuple[float, np.ndarray]:
        ric = ricci_matrix(curve(t))
        keep = [i for i in range(ric.shape[0]) if i not in deflate]
        return float(sym_eigenvalues(ric[np.ix_(keep, keep)])[eig_index]), ric

    v_lo, ric_lo = tracked(lo)
    v_hi, ric_hi = tracked(hi)
    for t, v, ric in ((lo, v_lo, ric_lo), (hi, v_hi, ric_hi)):
        if abs(v) <= bisect_rel * ric_scale(ric):
            return t, ricci_from_matrix(ric, zero_rel)
    if (v_lo < 0.0) == (v_hi < 0.0):
        raise NoSignChange(
            f"Eigenvalue {eig_index} has the same sign at {lo} ({v_lo:.3e}) and {hi} ({v_hi:.3e})"
        )

    for iteration in range(MAX_BISECT_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        v_mid, ric = tracked(mid)
        if abs(v_mid) <= bisect_rel * ric_scale(ric):
            logger.debug("Bisection converged after %d iterations at t=%.17g", iteration + 1, mid)
            return mid, ricci_from_matrix(ric, zero_rel)
        if (v_mid < 0.0) == (v_lo < 0.0):
            lo, v_lo = mid, v_mid
        else:
            hi = mid
    raise NoConvergence(f"Bisection on eigenvalue {eig_index} did not reach tolerance in [{lo}, {hi}]")


def segment_curve(tensor: StructureTensor, q0: np.ndarray, q1: np.ndarray) -> Callable[[float], MetricLieAlgebra]:
    """Straight segment (1-t) q0 + t q1 in the cone of inner products."""
    def curve(t: float) -> MetricLieAlgebra:
        return orthonormal_frame(tensor, InnerProduct((1.0 - t) * q0 + t * q1))

    return curve


def bisection_certificate(
    tensor: StructureTensor,
    target: int,
    found: Dict[int, Witness],
    tolerances: Optional[TolerancesConfig] = None,
) -> Optional[Witness]:
    """
    Witness for a signature with exactly one zero, by bisecting between
    metrics where that eigenvalue is negative and positive.

    Returns None when the bracketing witnesses are missing, do not bracket,
    or the landing signature differs from the target.
    """
    tolerances = tolerances or TolerancesConfig()
    signs = signature_from_index(target).signs
    if signs.count("0") != 1:
        return None
    k = signs.index("0")
    below = signature_index(SignatureTuple(signs[:k] + ("-",) + signs[k + 1:]))
    above = signature_index(SignatureTuple(signs[:k] + ("+",) + signs[k + 1:]))
    if below not in found or above not in found:
        return None
    w0, w1 = found[below], found[above]
    if w0.q is None or w1.q is None:
        return None

    dim = tensor.dim
    q0 = np.asarray(w0.q).reshape(dim, dim)
    q1 = np.asarray(w1.q).reshape(dim, dim)
    try:
        t, data = zero_crossing_bisect(
            segment_curve(tensor, q0, q1), k, 0.0, 1.0,
            bisect_rel=tolerances.bisect_rel, zero_rel=tolerances.zero_rel,
        )
    except (NoSignChange, NoConvergence) as e:
        logger.debug("No certificate for signature %d: %s", target, e)
        return None

    if data.index != target:
        logger.debug("Bisection for %d landed on %s", target, data.signature)
        return None
    q = (1.0 - t) * q0 + t * q1
    return Witness(
        index=target,
        signature=str(data.signature),
        source="bisection",
        q=[float(v) for v in q.ravel()],
        eigenvalues=[float(v) for v in data.eigenvalues],
        citation=f"segment between witnesses of {below} and {above}, t={t:.17g}",
    )


@dataclass(frozen=True)
class NegativePairResult:
    passed: bool
    samples: int
    worst_second: float  # Largest second-smallest eigenvalue, relative to ||Ric||
    failures: int


def negative_pair_property(
    spec: LieAlgebraSpec,
    budget: int,
    seed: int,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
) -> NegativePairResult:
    """
    Check that every sampled metric has two strictly negative Ricci eigenvalues.

    Raises:
        NotNonUnimodular: If the algebra is unimodular
    """
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()
    if is_unimodular(build_algebra(spec)):
        raise NotNonUnimodular(f"{spec.label} is unimodular")

    samples = failures = 0
    worst = -np.inf
    for batch in sample_batches(spec, budget, seed, search):
        eps = tolerances.zero_rel * np.maximum(1.0, batch.scales)
        second = batch.eigs[:, 1]
        failures += int(np.sum(second >= -eps))
        worst = max(worst, float(np.max(second / np.maximum(1.0, batch.scales))))
        samples += len(second)

    if failures:
        logger.warning("%s: %d of %d samples have fewer than two negative eigenvalues", spec.label, failures, samples)
    return NegativePairResult(failures == 0, samples, worst, failures)


@dataclass(frozen=True)
class ScalarSurvey:
    family: str
    samples: int
    minimum: float
    maximum: float
    negative: int
    zero: int
    positive: int


def scalar_survey(
    spec: LieAlgebraSpec,
    budget: int,
    seed: int,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
) -> ScalarSurvey:
    """Range and sign counts of the scalar curvature over sampled metrics."""
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()

    scalars, eps = [], []
    for batch in sample_batches(spec, budget, seed, search):
        scalars.append(np.einsum("nii->n", batch.ric))
        eps.append(tolerances.zero_rel * np.maximum(1.0, batch.scales))
    s = np.concatenate(scalars)
    e = np.concatenate(eps)
    return ScalarSurvey(
        family=spec.label,
        samples=int(s.size),
        minimum=float(s.min()),
        maximum=float(s.max()),
        negative=int(np.sum(s < -e)),
        zero=int(np.sum(np.abs(s) <= e)),
        positive=int(np.sum(s > e)),
    )
