"""Sign patterns of Ricci eigenvalues and the four-dimensional taxonomy."""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import IndexOutOfRange, NotFourDimensional

ZERO_REL_TOL = 1e-9
STRUCTURAL_REL_TOL = 1e-11

SIGNS = ("-", "0", "+")

# Row order of the taxonomy: 1 = (-,-,-,-) ... 15 = (+,+,+,+)
TAXONOMY: Tuple[Tuple[str, ...], ...] = (
    ("-", "-", "-", "-"),
    ("-", "-", "-", "0"),
    ("-", "-", "-", "+"),
    ("-", "-", "0", "0"),
    ("-", "-", "0", "+"),
    ("-", "-", "+", "+"),
    ("-", "0", "0", "0"),
    ("-", "0", "0", "+"),
    ("-", "0", "+", "+"),
    ("-", "+", "+", "+"),
    ("0", "0", "0", "0"),
    ("0", "0", "0", "+"),
    ("0", "0", "+", "+"),
    ("0", "+", "+", "+"),
    ("+", "+", "+", "+"),
)

_INDEX: Dict[Tuple[str, ...], int] = {signs: i + 1 for i, signs in enumerate(TAXONOMY)}

# Sorted signs are fixed by (#negative, #zero); lookup used by batch classification
_COUNT_INDEX = np.zeros((5, 5), dtype=int)
for _signs, _idx in _INDEX.items():
    _COUNT_INDEX[_signs.count("-"), _signs.count("0")] = _idx


@dataclass(frozen=True)
class SignatureTuple:
    """Signs of the eigenvalues in ascending order, e.g. ('-', '-', '0', '+')."""

    signs: Tuple[str, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        if any(s not in SIGNS for s in signs):
            raise ValueError(f"Signs must be drawn from {SIGNS}, got {signs}")
        ranks = [SIGNS.index(s) for s in signs]
        if ranks != sorted(ranks):
            raise ValueError(f"Signature {signs} is not ordered as -* 0* +*")
        object.__setattr__(self, "signs", signs)

    def __str__(self) -> str:
        return "(" + ",".join(self.signs) + ")"

    def __len__(self) -> int:
        return len(self.signs)

    @classmethod
    def parse(cls, text: str) -> "SignatureTuple":
        """Accepts '(-,-,0,+)' or '--0+'."""
        cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
        return cls(tuple(cleaned))

    def to_list(self) -> List[str]:
        return list(self.signs)

    @property
    def zeros(self) -> int:
        return self.signs.count("0")


def classify(eigs: Sequence[float], scale: float, zero_rel: float = ZERO_REL_TOL) -> SignatureTuple:
    """
    Signs of sorted eigenvalues; |lambda| <= zero_rel * max(1, scale) counts as zero.

    Args:
        eigs: Ascending eigenvalues
        scale: Matrix size used for the threshold (the caller passes ||Ric||_inf)
        zero_rel: Relative zero threshold
    """
    eps = zero_rel * max(1.0, float(scale))
    return SignatureTuple(tuple("0" if abs(v) <= eps else ("-" if v < 0 else "+") for v in eigs))


def sign_codes(eigs: np.ndarray, scales: np.ndarray, zero_rel: float = ZERO_REL_TOL) -> np.ndarray:
    """Batch version of classify: (N, n) eigenvalues -> (N, n) codes in {-1, 0, 1}."""
    eps = zero_rel * np.maximum(1.0, scales)[:, None]
    return np.where(np.abs(eigs) <= eps, 0, np.sign(eigs)).astype(int)


def index_codes(codes: np.ndarray) -> np.ndarray:
    """Taxonomy index for each row of 4-wide sign codes."""
    if codes.shape[-1] != 4:
        raise NotFourDimensional(f"Taxonomy indices exist for dimension 4, got {codes.shape[-1]}")
    return _COUNT_INDEX[np.sum(codes < 0, axis=-1), np.sum(codes == 0, axis=-1)]


def signature_index(s: SignatureTuple) -> int:
    """Row number 1..15 of a four-dimensional signature."""
    if len(s) != 4:
        raise NotFourDimensional(f"Taxonomy indices exist for dimension 4, got {len(s)}")
    return _INDEX[s.signs]


def signature_from_index(idx: int) -> SignatureTuple:
    if not 1 <= idx <= len(TAXONOMY):
        raise IndexOutOfRange(f"Signature index {idx} outside 1..{len(TAXONOMY)}")
    return SignatureTuple(TAXONOMY[idx - 1])


def format_signature(s: SignatureTuple) -> str:
    """'(-,-,0,+) [5]' for dimension 4, plain tuple otherwise."""
    if len(s) == 4:
        return f"{s} [{signature_index(s)}]"
    return str(s)
