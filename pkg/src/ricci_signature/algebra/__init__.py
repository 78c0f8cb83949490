"""Lie algebras by structure constants and the four-dimensional catalog."""

from .catalog import (
    DIRECT_A1,
    Family,
    LieAlgebraSpec,
    SLICES,
    build_algebra,
    family_entry,
    has_abelian_factor,
    list_catalog,
    list_slices,
    make_spec,
)
from .loader import dump_algebra, load_algebra, parse_algebra
from .structure import (
    StructureTensor,
    ad_matrices,
    ad_matrix,
    ad_traces,
    bracket,
    check_jacobi,
    is_unimodular,
    jacobi_residual,
)

__all__ = [
    "DIRECT_A1",
    "Family",
    "LieAlgebraSpec",
    "SLICES",
    "StructureTensor",
    "ad_matrices",
    "ad_matrix",
    "ad_traces",
    "bracket",
    "build_algebra",
    "check_jacobi",
    "dump_algebra",
    "family_entry",
    "has_abelian_factor",
    "is_unimodular",
    "jacobi_residual",
    "list_catalog",
    "list_slices",
    "load_algebra",
    "make_spec",
    "parse_algebra",
]
