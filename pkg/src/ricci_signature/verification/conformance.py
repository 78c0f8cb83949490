"""Randomized conformance suite for the A4_9 closed forms and the curvature engine.

Each check draws seeded parameters, evaluates one printed formula against an
independent computation and condenses the comparison into a single record.
A failed identity is a record with ``passed=False``; nothing here raises for it.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..algebra.catalog import Family, LieAlgebraSpec, build_algebra, make_spec
from ..algebra.structure import is_unimodular
from ..config.models import SearchConfig, TolerancesConfig
from ..curvature.ricci import mean_curvature_batch, ric_scale, ricci_batch, ricci_operator
from ..errors import RicciSignatureError
from ..metric.core import A49Params, canonical_a49, canonical_a49_batch
from ..metric.sampling import a49_param_batch, chunk_rng
from ..search.models import SCHEMA
from ..search.realizability import ScalarSurvey, negative_pair_property, scalar_survey
from ..signature.eigen import sym_eigenvalues
from . import a49

logger = logging.getLogger(__name__)

ORACLE_REL = 1e-10
DEFAULT_DRAWS = 1000
DEFAULT_SURVEY_BUDGET = 10_000
CHARPOLY_BETAS = 50
CHARPOLY_FS = 10

PARAM_KEYS = ("a", "b", "c", "d", "f", "beta")


class IdentityRecord(BaseModel):
    name: str
    citation: str
    samples: int
    max_residual: Optional[float]
    tolerance: float
    passed: bool
    detail: Optional[str] = None


class ConformanceReport(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    seed: int
    draws: int
    records: List[IdentityRecord]
    passed: bool
    generated_at: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)

    def failures(self) -> List[str]:
        return [r.name for r in self.records if not r.passed]


@dataclass
class CheckContext:
    rng: np.random.Generator
    draws: int
    budget: int
    seed: int
    search: SearchConfig
    tolerances: TolerancesConfig


def _params(rng: np.random.Generator, count: int, beta_range=(-1.0, 1.0)) -> List[A49Params]:
    raw = a49_param_batch(rng, count, beta_range)
    return [A49Params(**{k: float(raw[k][i]) for k in PARAM_KEYS}) for i in range(count)]


def _record(name: str, citation: str, samples: int, residual: Optional[float], tolerance: float,
            passed: bool, detail: Optional[str] = None) -> IdentityRecord:
    return IdentityRecord(
        name=name,
        citation=citation,
        samples=samples,
        max_residual=None if residual is None else float(residual),
        tolerance=tolerance,
        passed=bool(passed),
        detail=detail,
    )


def _rel(x: float, y: float) -> float:
    return abs(x - y) / (1.0 + abs(y))


def _mat_rel(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(x - y))) / (1.0 + ric_scale(y))


def check_master_oracle(ctx: CheckContext) -> List[IdentityRecord]:
    """Explicit matrix against the general formula, plus H = -l f_4."""
    params = _params(ctx.rng, ctx.draws)
    arrays = {k: np.array([getattr(p, k) for p in params]) for k in PARAM_KEYS}
    constants = canonical_a49_batch(**arrays)
    general = ricci_batch(constants)

    residual = max(_mat_rel(a49.explicit_ric_a49(p), general[i]) for i, p in enumerate(params))

    h = mean_curvature_batch(constants)
    expected = np.zeros_like(h)
    expected[:, 3] = -np.array([p.l for p in params])
    h_residual = float(np.max(np.abs(h - expected) / (1.0 + np.abs(expected[:, 3:4]))))

    tol = ctx.tolerances.identity_rel
    return [
        _record("master_oracle", "explicit Ricci matrix of A4_9 in its canonical frame",
                len(params), residual, ORACLE_REL, residual <= ORACLE_REL),
        _record("mean_curvature", "H = -l f_4 with l = a(2 + 2 beta)",
                len(params), h_residual, tol, h_residual <= tol),
    ]


def check_det_identity(ctx: CheckContext) -> List[IdentityRecord]:
    """Determinant identity, its positive right side and the resulting lambda_2 < 0."""
    tol = ctx.tolerances.identity_rel
    zero_rel = ctx.tolerances.zero_rel
    params = _params(ctx.rng, ctx.draws)

    residual, min_rhs = 0.0, math.inf
    worst_second, failures = -math.inf, 0
    worst_fourth = -math.inf
    for p in params:
        lhs, rhs = a49.det_submatrix_identity(p)
        residual = max(residual, _rel(lhs, rhs))
        min_rhs = min(min_rhs, rhs)

        ric = a49.explicit_ric_a49(p)
        scale = max(1.0, ric_scale(ric))
        second = float(sym_eigenvalues(ric)[1])
        worst_second = max(worst_second, second / scale)
        failures += int(second >= -zero_rel * scale)
        worst_fourth = max(worst_fourth, float(ric[3, 3]) / scale)

    return [
        _record("det_identity", "4(det Ric_12 + det Ric_13) polynomial identity",
                len(params), residual, tol, residual <= tol and min_rhs > 0.0,
                detail=f"min rhs {min_rhs:.6g}"),
        _record("second_eigenvalue_negative", "at least two negative eigenvalues on A4_9",
                len(params), worst_second, zero_rel, failures == 0,
                detail=f"{failures} draws with lambda_2 >= -eps"),
        _record("fourth_diagonal_negative", "Ric_44 = -r/2 < 0",
                len(params), worst_fourth, 0.0, worst_fourth < 0.0),
    ]


def _charpoly_residual(expected: np.ndarray, ric: np.ndarray) -> float:
    # Coefficient k is compared relative to max(1, spectral radius of 2 Ric)^k
    got = a49.eigen_charpoly(ric)
    radius = max(1.0, float(np.max(np.abs(sym_eigenvalues(2.0 * ric)))))
    return max(abs(got[k] - expected[k]) / radius**k for k in range(len(expected)))


def check_charpoly(ctx: CheckContext) -> List[IdentityRecord]:
    tol = ctx.tolerances.identity_rel
    betas = -0.5 + 1.5 * ctx.rng.uniform(0.0, 1.0, CHARPOLY_BETAS)
    betas = betas[betas > -0.5]
    fs = ctx.rng.uniform(-2.0, 2.0, CHARPOLY_FS)

    records = []
    for case, poly in (("b2", a49.charpoly_case_b2), ("b3", a49.charpoly_case_b3)):
        residual = max(
            _charpoly_residual(poly(beta, f), a49.explicit_ric_a49(a49.case_params(case, beta, f)))
            for beta in betas
            for f in fs
        )
        records.append(
            _record(f"charpoly_{case}", f"factorized characteristic polynomial, case {case}",
                    len(betas) * len(fs), residual, tol, residual <= tol)
        )

    residual, all_negative = 0.0, True
    for beta in betas:
        ric = a49.explicit_ric_a49(a49.case_params("ab1", beta))
        residual = max(residual, _charpoly_residual(a49.charpoly_case_ab1(beta), ric))
        all_negative &= bool(np.all(sym_eigenvalues(ric) < 0.0))
    records.append(
        _record("charpoly_ab1", "factorized characteristic polynomial, a = b = 1",
                len(betas), residual, tol, residual <= tol and all_negative)
    )
    return records


def _lemma_params(ctx: CheckContext, strict: bool) -> List[A49Params]:
    params = _params(ctx.rng, ctx.draws, beta_range=(-1.0, -0.5))
    if strict:
        params = [p for p in params if p.beta < -0.5]
    return params


def check_lemma2(ctx: CheckContext) -> List[IdentityRecord]:
    """Trace decomposition, h1 >= 0, independence of b, and the t0 certificate."""
    tol = ctx.tolerances.identity_rel
    params = _lemma_params(ctx, strict=False)
    angles = ctx.rng.uniform(-math.pi, math.pi, len(params))
    other_b = ctx.rng.uniform(0.1, 2.0, len(params))

    decomposition, h1_worst, b_residual = 0.0, 0.0, 0.0
    for p, t, b in zip(params, angles, other_b):
        lhs, h1, h2 = a49.lemma2_decomposition(a49.LemmaTwoFrame(float(t), p))
        decomposition = max(decomposition, _rel(h1 + h2, lhs))
        h1_worst = max(h1_worst, -h1 / (1.0 + p.c * p.c + p.d * p.d))
        lhs_b, _, _ = a49.lemma2_decomposition(a49.LemmaTwoFrame(float(t), p.replace(b=float(b))))
        b_residual = max(b_residual, _rel(lhs_b, lhs))

    records = [
        _record("lemma2_decomposition", "2 trace(Ric D(t)) = h1(t) + h2(t)",
                len(params), decomposition, tol, decomposition <= tol),
        _record("lemma2_h1_nonnegative", "h1(t) >= 0 for beta <= -1/2",
                len(params), h1_worst, tol, h1_worst <= tol),
        _record("lemma2_b_independence", "2 trace(Ric D(t)) does not depend on b",
                len(params), b_residual, tol, b_residual <= tol),
    ]

    strict = _lemma_params(ctx, strict=True)
    closed, constraint, failures = 0.0, 0.0, 0
    for p in strict:
        t0 = a49.lemma2_t0(p)
        fr = a49.LemmaTwoFrame(t0, p)
        h2_closed = a49.lemma2_h2_closed(p, t0)
        closed = max(closed, _rel(a49.lemma2_h2(fr), h2_closed))
        constraint = max(
            constraint,
            abs(p.a * math.sin(2.0 * t0) + p.f * math.cos(2.0 * t0)) / (1.0 + abs(p.a) + abs(p.f)),
        )
        certificate = a49.lemma2_t0_certificate(p)
        top = float(sym_eigenvalues(a49.explicit_ric_a49(p))[3])
        failures += int(certificate <= 0.0 or top <= 0.0 or math.cos(2.0 * t0) <= 0.0)

    records += [
        _record("lemma2_h2_closed", "h2(t0) closed form at the critical angle",
                len(strict), max(closed, constraint), tol, closed <= tol and constraint <= tol),
        _record("lemma2_t0_certificate", "h1(t0) + h2(t0) > 0, so lambda_4 > 0",
                len(strict), None, 0.0, failures == 0, detail=f"{failures} failing draws"),
    ]
    return records


def check_beta_half(ctx: CheckContext) -> List[IdentityRecord]:
    tol = ctx.tolerances.identity_rel
    a = ctx.rng.uniform(0.1, 2.0, ctx.draws)
    b = ctx.rng.uniform(0.1, 2.0, ctx.draws)
    d = ctx.rng.uniform(-2.0, 2.0, ctx.draws)

    residual, failures = 0.0, 0
    for ai, bi, di in zip(a, b, d):
        block1, block2 = a49.beta_half_blocks(float(ai), float(bi), float(di))
        explicit = a49.explicit_ric_a49(A49Params(a=ai, b=bi, c=0.0, d=di, f=0.0, beta=-0.5))
        residual = max(residual, _mat_rel(a49.assemble_beta_half(block1, block2), explicit))
        failures += int(abs(np.trace(block1)) > tol * (1.0 + ric_scale(block1)))
        failures += int(not np.all(sym_eigenvalues(block2) < 0.0))

    return [
        _record("beta_half_blocks", "beta = -1/2, c = f = 0 block decomposition",
                ctx.draws, residual, tol, residual <= tol and failures == 0,
                detail=f"{failures} block property violations"),
    ]


def check_open_blocks(ctx: CheckContext) -> List[IdentityRecord]:
    tol = ctx.tolerances.identity_rel
    a = ctx.rng.uniform(0.1, 2.0, ctx.draws)
    f = ctx.rng.uniform(-2.0, 2.0, ctx.draws)
    beta = -1.0 + -0.5 - ctx.rng.uniform(-1.0, -0.5, ctx.draws)

    assembled, invariants = 0.0, 0.0
    for ai, fi, bi in zip(a, f, beta):
        blocks = a49.neg_half_open_blocks(float(ai), float(fi), float(bi))
        explicit = a49.explicit_ric_a49(A49Params(a=ai, b=2.0 * ai, c=0.0, d=0.0, f=fi, beta=bi))
        assembled = max(assembled, _mat_rel(blocks.assemble(), explicit))
        invariants = max(
            invariants,
            _rel(float(np.trace(blocks.block)), a49.open_block_trace(float(ai), float(bi))),
            _rel(float(np.linalg.det(blocks.block)), a49.open_block_det(float(ai), float(fi), float(bi))),
        )

    return [
        _record("open_blocks", "b = 2a, c = d = 0 block decomposition for beta in (-1, -1/2]",
                ctx.draws, assembled, tol, assembled <= tol),
        _record("open_block_invariants", "trace and determinant of the (2,3) block",
                ctx.draws, invariants, tol, invariants <= tol),
    ]


def check_beta_one(ctx: CheckContext) -> List[IdentityRecord]:
    a = ctx.rng.uniform(0.1, 2.0, ctx.draws)
    b = ctx.rng.uniform(0.1, 2.0, ctx.draws)
    c = ctx.rng.uniform(-2.0, 2.0, ctx.draws)
    d = ctx.rng.uniform(-2.0, 2.0, ctx.draws)
    failures = sum(
        not a49.beta1_submatrix_check(float(ai), float(bi), float(ci), float(di))
        for ai, bi, ci, di in zip(a, b, c, d)
    )
    records = [
        _record("beta1_submatrix", "beta = 1: Ric minus its first row and column is negative definite",
                ctx.draws, None, 0.0, failures == 0, detail=f"{failures} failing draws"),
    ]

    structural = ctx.tolerances.structural_rel
    got, zero_residual = [], 0.0
    for b_value, expected in ((1.0, 1), (4.0, 2), (6.0, 3)):
        data = ricci_operator(
            canonical_a49(A49Params(a=1.0, b=b_value, c=0.0, d=0.0, f=0.0, beta=1.0)),
            ctx.tolerances.zero_rel,
        )
        got.append(data.index)
        if expected == 2:
            zero_residual = float(np.min(np.abs(data.eigenvalues))) / max(1.0, data.scale)
    records.append(
        _record("beta1_rows", "beta = 1, a = 1, c = d = f = 0 at b = 1, 4, 6",
                3, zero_residual, structural, got == [1, 2, 3] and zero_residual <= structural,
                detail=f"indices {got}"),
    )
    return records


SCALAR_BOTH_SIGNS = {Family.A3_9}
# Admit flat metrics, so S <= 0 rather than S < 0
SCALAR_FLAT_ALLOWED = {Family.A3_6}


def scalar_sign_offence(family: Family, survey: ScalarSurvey) -> Optional[str]:
    """Why a scalar-curvature survey breaks the sign rule of its family, or None."""
    if family == Family.A1x4:
        if survey.negative or survey.positive:
            return "nonzero on the abelian algebra"
    elif family in SCALAR_BOTH_SIGNS:
        if not (survey.negative and survey.positive):
            return "one sign only"
    elif family in SCALAR_FLAT_ALLOWED:
        if survey.positive:
            return f"{survey.positive} positive"
    elif survey.positive or survey.zero:
        return f"{survey.positive} positive, {survey.zero} zero"
    return None


def _survey_specs() -> List[LieAlgebraSpec]:
    return [
        make_spec("4A1"), make_spec("A2+2A1"), make_spec("2A2"),
        make_spec("A3_1+A1"), make_spec("A3_2+A1"), make_spec("A3_3+A1"), make_spec("A3_4+A1"),
        make_spec("A3_5+A1", alpha=0.5), make_spec("A3_6+A1"), make_spec("A3_7+A1", alpha=0.5),
        make_spec("A3_8+A1"), make_spec("A3_9+A1"),
        make_spec("A4_1"), make_spec("A4_2", alpha=0.5), make_spec("A4_2[-2]"),
        make_spec("A4_3"), make_spec("A4_4"),
        make_spec("A4_5", alpha=0.5, beta=0.75), make_spec("A4_5[a,-1-a]", alpha=-0.75),
        make_spec("A4_5[-1/2,-1/2]"),
        make_spec("A4_6", alpha=1.0, beta=0.5), make_spec("A4_6[-2b,b]", beta=1.0),
        make_spec("A4_7"), make_spec("A4_8"),
        make_spec("A4_9", beta=-0.75), make_spec("A4_9", beta=0.5),
        make_spec("A4_10"), make_spec("A4_11", alpha=1.0), make_spec("A4_12"),
    ]


def check_scalar_sign(ctx: CheckContext) -> List[IdentityRecord]:
    """S = 0 on the abelian algebra, S <= 0 on A3_6 + A1, both signs on A3_9 + A1, S < 0 elsewhere."""
    samples, offenders = 0, []
    for spec in _survey_specs():
        survey = scalar_survey(spec, ctx.budget, ctx.seed, ctx.search, ctx.tolerances)
        samples += survey.samples
        offence = scalar_sign_offence(spec.family, survey)
        if offence:
            offenders.append(f"{spec.label} ({offence})")

    return [
        _record("scalar_curvature_sign", "scalar curvature sign across the catalog",
                samples, None, ctx.tolerances.zero_rel, not offenders,
                detail=", ".join(offenders) or None),
    ]


def check_negative_pair(ctx: CheckContext) -> List[IdentityRecord]:
    """Two strictly negative eigenvalues on every non-unimodular family."""
    samples, worst, offenders = 0, -math.inf, []
    for spec in _survey_specs():
        if is_unimodular(build_algebra(spec)):
            continue
        result = negative_pair_property(spec, ctx.budget, ctx.seed, ctx.search, ctx.tolerances)
        samples += result.samples
        worst = max(worst, result.worst_second)
        if not result.passed:
            offenders.append(spec.label)

    return [
        _record("negative_pair", "non-unimodular metric algebras have two negative Ricci eigenvalues",
                samples, worst, ctx.tolerances.zero_rel, not offenders,
                detail=", ".join(offenders) or None),
    ]


Check = Callable[[CheckContext], List[IdentityRecord]]

# Stream numbers are fixed per check
CHECKS: Sequence[Tuple[str, int, Check]] = (
    ("master_oracle", 1, check_master_oracle),
    ("det_identity", 2, check_det_identity),
    ("charpoly", 3, check_charpoly),
    ("lemma2", 4, check_lemma2),
    ("beta_half", 5, check_beta_half),
    ("open_blocks", 6, check_open_blocks),
    ("beta_one", 7, check_beta_one),
    ("scalar_sign", 8, check_scalar_sign),
    ("negative_pair", 9, check_negative_pair),
)


def run_identities(
    seed: int,
    draws: int = DEFAULT_DRAWS,
    budget: int = DEFAULT_SURVEY_BUDGET,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
    only: Optional[Sequence[str]] = None,
) -> ConformanceReport:
    """
    Run every conformance check.

    Args:
        seed: Seed for all parameter draws
        draws: Random parameter draws per closed-form check
        budget: Sampled metrics per family in the catalog-wide surveys
        only: Restrict to the named checks

    Returns:
        ConformanceReport with one record per printed formula
    """
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()

    records: List[IdentityRecord] = []
    for name, stream, check in CHECKS:
        if only is not None and name not in only:
            continue
        ctx = CheckContext(chunk_rng(seed, 0, stream), draws, budget, seed, search, tolerances)
        try:
            records.extend(check(ctx))
        except (RicciSignatureError, ArithmeticError, ValueError) as e:
            logger.error("Check %s aborted: %s", name, e)
            records.append(_record(name, "aborted", 0, None, 0.0, False, detail=str(e)))

    for record in records:
        if not record.passed:
            logger.warning("Identity %s failed (residual %s, %s)", record.name, record.max_residual, record.detail)
    logger.info("Conformance: %d records, %d failed", len(records), sum(not r.passed for r in records))

    return ConformanceReport(
        seed=seed,
        draws=draws,
        records=records,
        passed=all(r.passed for r in records),
    )
