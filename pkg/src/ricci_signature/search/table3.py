"""Realizability grid for the unimodular four-dimensional algebras.

Every expected cell must be witnessed (random search, shipped closed-form
witnesses, or a bisection certificate) at every grid point of its row; no
excluded cell may be witnessed. Non-discovery is reported as "not found
within budget", never as impossibility.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field

from ..algebra.catalog import LieAlgebraSpec, build_algebra, make_spec
from ..config.models import SearchConfig, TolerancesConfig
from ..signature.classify import TAXONOMY
from .models import SCHEMA, Witness
from .realizability import bisection_certificate, realizability_search
from .witnesses import DATA_DIR, load_witnesses, witnesses_for

logger = logging.getLogger(__name__)

TABLE3_FILE = DATA_DIR / "table3.yaml"

WITNESSED = "witnessed"
NOT_FOUND = "not-found"
EXCLUDED = "excluded-by-paper"


class Table3Row(BaseModel):
    name: str
    realizable: List[int]
    grid: Dict[str, List[float]] = Field(default_factory=dict)

    def specs(self, grid_points: int) -> List[LieAlgebraSpec]:
        if not self.grid:
            return [make_spec(self.name)]
        (param, values), = self.grid.items()
        return [make_spec(self.name, **{param: v}) for v in values[:grid_points]]


class PointResult(BaseModel):
    label: str
    found: Dict[int, Witness]
    samples_used: int


class RowResult(BaseModel):
    name: str
    expected: List[int]
    witnessed: List[int]  # Witnessed at every grid point
    missing: List[int]
    violations: List[int]
    points: List[PointResult]
    passed: bool

    def cells(self) -> List[str]:
        out = []
        for idx in range(1, len(TAXONOMY) + 1):
            if idx in self.witnessed or idx in self.violations:
                out.append(WITNESSED)
            elif idx in self.expected:
                out.append(NOT_FOUND)
            else:
                out.append(EXCLUDED)
        return out


class Table3Report(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    seed: int
    budget: int
    rows: List[RowResult]
    passed: bool
    generated_at: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)


def load_table3(path: Union[str, Path, None] = None) -> List[Table3Row]:
    path = Path(path) if path else TABLE3_FILE
    with open(path, "r", encoding="utf-8") as f:
        return [Table3Row(**row) for row in yaml.safe_load(f)["rows"]]


def witness_point(
    spec: LieAlgebraSpec,
    expected: List[int],
    budget: int,
    seed: int,
    search: SearchConfig,
    tolerances: TolerancesConfig,
    entries=None,
) -> PointResult:
    """All witnesses for one algebra: search, shipped witnesses, then bisection for missing single-zero cells."""
    report = realizability_search(spec, budget, seed, search, tolerances)
    found = dict(report.found)
    for idx, witness in witnesses_for(spec, entries).items():
        found.setdefault(idx, witness)

    tensor = build_algebra(spec)
    for target in expected:
        if target not in found:
            certificate = bisection_certificate(tensor, target, found, tolerances)
            if certificate is not None:
                found[target] = certificate

    return PointResult(label=spec.label, found=dict(sorted(found.items())), samples_used=report.samples_used)


def verify_table3(
    budget: int,
    seed: int,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
    rows: Optional[List[str]] = None,
) -> Table3Report:
    """
    Check every row of the realizability grid.

    Args:
        budget: Random samples per algebra (per grid point)
        seed: Sampler seed
        rows: Restrict to these row names (all rows when omitted)

    Returns:
        Table3Report; failures are row entries, nothing is raised
    """
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()
    entries = load_witnesses()

    results = []
    for row in load_table3():
        if rows is not None and row.name not in rows:
            continue
        points = [
            witness_point(spec, row.realizable, budget, seed, search, tolerances, entries)
            for spec in row.specs(search.grid_points)
        ]
        everywhere = set.intersection(*(set(p.found) for p in points))
        anywhere = set.union(*(set(p.found) for p in points))

        witnessed = sorted(everywhere & set(row.realizable))
        missing = sorted(set(row.realizable) - everywhere)
        violations = sorted(anywhere - set(row.realizable))
        passed = not missing and not violations
        if not passed:
            logger.warning("%s: missing %s, unexpected %s", row.name, missing, violations)

        results.append(
            RowResult(
                name=row.name,
                expected=row.realizable,
                witnessed=witnessed,
                missing=missing,
                violations=violations,
                points=points,
                passed=passed,
            )
        )

    return Table3Report(
        seed=seed,
        budget=budget,
        rows=results,
        passed=all(r.passed for r in results),
    )
