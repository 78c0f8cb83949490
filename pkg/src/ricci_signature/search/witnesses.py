"""Closed-form witnesses shipped with the package (data/witnesses.yaml)."""

import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
import yaml
from pydantic import BaseModel, Field, model_validator

from ..algebra.catalog import LieAlgebraSpec, build_algebra, make_spec
from ..metric.core import A49Params
from .models import Witness
from .realizability import replay_witness

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
WITNESS_FILE = DATA_DIR / "witnesses.yaml"

Number = Union[float, int, str]


def _number(value: Number) -> float:
    """Accepts plain numbers and 'p/q' fractions."""
    return float(Fraction(value)) if isinstance(value, str) else float(value)


class TwistedMetric(BaseModel):
    mu: float = Field(gt=0)
    s1_sq: float = Field(ge=0)
    s3_sq: float = Field(ge=0)

    def gram(self) -> np.ndarray:
        """Gram matrix on the su(2)+R catalog basis.

        e1, e2, e3 get lengths^2 (1/mu, 1/mu, 1) so that the orthonormal
        Milnor frame has constants (1, 1, mu); e4 = u4 - s1 u1 - s3 u3 with
        u4 a unit vector orthogonal to u1, u2, u3.
        """
        x = np.array([1.0 / self.mu, 1.0 / self.mu, 1.0])
        s1, s3 = math.sqrt(self.s1_sq), math.sqrt(self.s3_sq)
        q = np.diag(np.append(x, 1.0 + self.s1_sq + self.s3_sq))
        q[0, 3] = q[3, 0] = -s1 * math.sqrt(x[0])
        q[2, 3] = q[3, 2] = -s3 * math.sqrt(x[2])
        return q


class MetricSpec(BaseModel):
    diag: Optional[List[Number]] = None
    twisted: Optional[TwistedMetric] = None

    @model_validator(mode="after")
    def validate_one_form(self) -> "MetricSpec":
        if (self.diag is None) == (self.twisted is None):
            raise ValueError("metric needs exactly one of 'diag' or 'twisted'")
        return self

    def gram(self) -> np.ndarray:
        if self.diag is not None:
            return np.diag([_number(v) for v in self.diag])
        return self.twisted.gram()


class WitnessEntry(BaseModel):
    algebra: str
    alpha: Optional[float] = None
    beta: Optional[float] = None
    signature: int = Field(ge=1, le=15)
    metric: Optional[MetricSpec] = None
    a49: Optional[Dict[str, float]] = None
    source: str = "derived"
    citation: str

    @model_validator(mode="after")
    def validate_one_metric(self) -> "WitnessEntry":
        if (self.metric is None) == (self.a49 is None):
            raise ValueError("witness needs exactly one of 'metric' or 'a49'")
        return self

    def spec(self) -> LieAlgebraSpec:
        return make_spec(self.algebra, self.alpha, self.beta)

    def to_witness(self) -> Witness:
        """Evaluate the entry; the witness carries the signature actually computed."""
        witness = Witness(index=self.signature, signature="", source=self.source, citation=self.citation)
        if self.a49 is not None:
            witness.a49 = A49Params(beta=self.beta, **self.a49).to_dict()
        else:
            witness.q = [float(v) for v in self.metric.gram().ravel()]

        data = replay_witness(build_algebra(self.spec()), witness)
        witness.index = data.index
        witness.signature = str(data.signature)
        witness.eigenvalues = [float(v) for v in data.eigenvalues]
        if data.index != self.signature:
            logger.warning(
                "%s witness claims %d but evaluates to %s", self.algebra, self.signature, data.signature
            )
        return witness


class WitnessFile(BaseModel):
    version: int
    witnesses: List[WitnessEntry]


def load_witnesses(path: Union[str, Path, None] = None) -> List[WitnessEntry]:
    path = Path(path) if path else WITNESS_FILE
    with open(path, "r", encoding="utf-8") as f:
        return WitnessFile(**yaml.safe_load(f)).witnesses


def witnesses_for(spec: LieAlgebraSpec, entries: Optional[List[WitnessEntry]] = None) -> Dict[int, Witness]:
    """Evaluated witnesses whose algebra and parameters match spec exactly."""
    entries = entries if entries is not None else load_witnesses()
    found: Dict[int, Witness] = {}
    for entry in entries:
        entry_spec = entry.spec()
        if entry_spec.family == spec.family and entry_spec.params == spec.params:
            witness = entry.to_witness()
            found.setdefault(witness.index, witness)
    return found
