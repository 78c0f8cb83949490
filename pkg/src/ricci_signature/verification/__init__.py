"""Closed forms of A4_9^beta and the suites that verify them."""

from .a49 import (
    LemmaTwoFrame,
    OpenBlocks,
    assemble_beta_half,
    beta1_submatrix_check,
    beta_half_blocks,
    big_f,
    case_params,
    charpoly_case_ab1,
    charpoly_case_b2,
    charpoly_case_b3,
    det_submatrix_identity,
    eigen_charpoly,
    explicit_ric_a49,
    lemma2_decomposition,
    lemma2_h1,
    lemma2_h2,
    lemma2_h2_closed,
    lemma2_t0,
    lemma2_t0_certificate,
    neg_half_open_blocks,
    open_block_det,
    open_block_trace,
    open_blocks_big_f,
)
from .conformance import CHECKS, ConformanceReport, IdentityRecord, run_identities
from .proposition import (
    DEFAULT_GRID,
    BetaResult,
    Prop1Report,
    expected_signatures,
    regime,
    regime_witnesses,
    verify_prop1,
)

__all__ = [
    "LemmaTwoFrame",
    "OpenBlocks",
    "assemble_beta_half",
    "beta1_submatrix_check",
    "beta_half_blocks",
    "big_f",
    "case_params",
    "charpoly_case_ab1",
    "charpoly_case_b2",
    "charpoly_case_b3",
    "det_submatrix_identity",
    "eigen_charpoly",
    "explicit_ric_a49",
    "lemma2_decomposition",
    "lemma2_h1",
    "lemma2_h2",
    "lemma2_h2_closed",
    "lemma2_t0",
    "lemma2_t0_certificate",
    "neg_half_open_blocks",
    "open_block_det",
    "open_block_trace",
    "open_blocks_big_f",
    "CHECKS",
    "ConformanceReport",
    "IdentityRecord",
    "run_identities",
    "DEFAULT_GRID",
    "BetaResult",
    "Prop1Report",
    "expected_signatures",
    "regime",
    "regime_witnesses",
    "verify_prop1",
]
