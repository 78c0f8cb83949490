"""Eigenvalues and signature classification."""

from .classify import (
    STRUCTURAL_REL_TOL,
    TAXONOMY,
    ZERO_REL_TOL,
    SignatureTuple,
    classify,
    format_signature,
    index_codes,
    sign_codes,
    signature_from_index,
    signature_index,
)
from .eigen import jacobi_eigenvalues, sym_eigenvalues

__all__ = [
    "STRUCTURAL_REL_TOL",
    "TAXONOMY",
    "ZERO_REL_TOL",
    "SignatureTuple",
    "classify",
    "format_signature",
    "index_codes",
    "jacobi_eigenvalues",
    "sign_codes",
    "signature_from_index",
    "signature_index",
    "sym_eigenvalues",
]
