"""JSON definitions for user-supplied algebras.

Format::

    {"dim": 4, "brackets": [{"i": 2, "j": 3, "out": {"1": 1.0}}, ...]}

Only ``i < j`` entries are listed; indices are 1-based.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..errors import InvalidAlgebraDefinition
from .structure import StructureTensor, check_jacobi

logger = logging.getLogger(__name__)


class BracketEntry(BaseModel):
    i: int
    j: int
    out: Dict[int, float]

    @model_validator(mode="after")
    def _ordered(self) -> "BracketEntry":
        if not self.i < self.j:
            raise ValueError(f"bracket entries must have i < j, got ({self.i}, {self.j})")
        return self


class AlgebraDefinition(BaseModel):
    dim: int = Field(gt=0)
    brackets: List[BracketEntry] = Field(default_factory=list)

    @field_validator("brackets")
    @classmethod
    def _unique_pairs(cls, v: List[BracketEntry]) -> List[BracketEntry]:
        pairs = [(b.i, b.j) for b in v]
        if len(pairs) != len(set(pairs)):
            raise ValueError("duplicate (i, j) bracket entries")
        return v

    def to_tensor(self) -> StructureTensor:
        return StructureTensor.from_brackets(
            self.dim, {(b.i, b.j): b.out for b in self.brackets}
        )


def parse_algebra(data: Dict[str, Any]) -> StructureTensor:
    """
    Build and validate a structure tensor from a decoded definition.

    Raises:
        InvalidAlgebraDefinition: Malformed document or Jacobi identity fails
        IndexOutOfRange: Index outside 1..dim
    """
    try:
        definition = AlgebraDefinition.model_validate(data)
    except ValidationError as e:
        raise InvalidAlgebraDefinition(f"Malformed algebra definition: {e}") from e

    tensor = definition.to_tensor()
    if not check_jacobi(tensor):
        raise InvalidAlgebraDefinition("Brackets violate the Jacobi identity")
    return tensor


def load_algebra(path: Union[str, Path]) -> StructureTensor:
    """Read a JSON algebra file; see module docstring for the format."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Algebra file not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidAlgebraDefinition(f"{path}: invalid JSON ({e})") from e

    tensor = parse_algebra(data)
    logger.info("Loaded %d-dimensional algebra from %s", tensor.dim, path)
    return tensor


def dump_algebra(tensor: StructureTensor) -> Dict[str, Any]:
    """Inverse of parse_algebra (string keys for the output map)."""
    return {
        "dim": tensor.dim,
        "brackets": [
            {"i": i, "j": j, "out": {str(k): v for k, v in out.items()}}
            for (i, j), out in tensor.nonzero_brackets().items()
        ],
    }
