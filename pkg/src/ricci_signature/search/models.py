"""Report models shared by the search and verification suites."""

from datetime import datetime, timezone
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..algebra.catalog import LieAlgebraSpec

SCHEMA = "ricci-sig/1"


class Witness(BaseModel):
    """An inner product (or canonical A4_9 parameters) realizing a signature."""

    index: int
    signature: str
    source: str  # identity | random | product | canonical | bisection | closed-form | derived
    q: Optional[List[float]] = None  # Row-major Gram matrix on the catalog basis
    a49: Optional[Dict[str, float]] = None
    eigenvalues: List[float] = Field(default_factory=list)
    sample: Optional[int] = None
    citation: Optional[str] = None


class SearchReport(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    algebra: LieAlgebraSpec
    found: Dict[int, Witness] = Field(default_factory=dict)
    samples_used: int = 0
    seed: int
    generated_at: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)

    def indices(self) -> List[int]:
        return sorted(self.found)


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")
