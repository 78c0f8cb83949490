"""Serialization of search and verification reports (JSON and CSV grids)."""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd
from pydantic import BaseModel

from ..algebra.catalog import build_algebra
from ..signature.classify import TAXONOMY
from .models import SearchReport, utc_timestamp
from .realizability import replay_witness
from .table3 import EXCLUDED, WITNESSED, Table3Report, Table3Row
from .witnesses import DATA_DIR

logger = logging.getLogger(__name__)

REFERENCE_GRID = DATA_DIR / "table3.csv"
COLUMNS = [str(i) for i in range(1, len(TAXONOMY) + 1)]


def to_json(report: BaseModel, timestamp: bool = True) -> str:
    """Stable JSON text; the timestamp is the only field that varies between identical runs."""
    data = report.model_dump(mode="json", by_alias=True)
    data["generated_at"] = utc_timestamp() if timestamp else None
    return json.dumps(data, indent=2, sort_keys=False)


def read_search_report(path: Union[str, Path]) -> SearchReport:
    with open(path, "r", encoding="utf-8") as f:
        return SearchReport.model_validate(json.load(f))


def replay_report(report: SearchReport, zero_rel: float = 1e-9) -> Dict[int, bool]:
    """Recompute every witness; maps signature index to whether it reproduces."""
    tensor = build_algebra(report.algebra)
    return {
        idx: replay_witness(tensor, witness, zero_rel).index == idx
        for idx, witness in report.found.items()
    }


def search_grid(report: SearchReport) -> pd.DataFrame:
    """One-row grid of witnessed / not-found cells for a single search."""
    row = {"algebra": report.algebra.slice or report.algebra.family.value}
    for col in COLUMNS:
        row[col] = WITNESSED if int(col) in report.found else "not-found"
    return pd.DataFrame([row], columns=["algebra"] + COLUMNS)


def table3_grid(report: Table3Report) -> pd.DataFrame:
    rows = [dict(zip(["algebra"] + COLUMNS, [r.name] + r.cells())) for r in report.rows]
    return pd.DataFrame(rows, columns=["algebra"] + COLUMNS)


def reference_grid(rows: List[Table3Row]) -> pd.DataFrame:
    """Grid as it reads when every realizable cell is witnessed; the source of table3.csv."""
    records = [
        [row.name] + [WITNESSED if int(col) in row.realizable else EXCLUDED for col in COLUMNS]
        for row in rows
    ]
    return pd.DataFrame(records, columns=["algebra"] + COLUMNS)


def grid_csv(frame: pd.DataFrame) -> str:
    # Labels such as A4_5[a,-1-a] carry commas; to_csv quotes them
    return frame.to_csv(index=False, lineterminator="\n")


def write_reference_grid(rows: List[Table3Row], path: Optional[Union[str, Path]] = None) -> Path:
    target = Path(path or REFERENCE_GRID)
    target.write_text(grid_csv(reference_grid(rows)), encoding="utf-8")
    logger.info("Wrote reference grid for %d rows to %s", len(rows), target)
    return target


def load_reference_grid(path: Optional[Union[str, Path]] = None) -> pd.DataFrame:
    return pd.read_csv(path or REFERENCE_GRID, dtype=str)


def diff_grid(frame: pd.DataFrame, reference: Optional[pd.DataFrame] = None) -> List[Tuple[str, str, str, str]]:
    """
    Cells where a grid disagrees with the checked-in rendering.

    Only rows present in frame are compared.

    Returns:
        (algebra, column, got, expected) tuples
    """
    reference = reference if reference is not None else load_reference_grid()
    ref = reference.set_index("algebra")
    diffs = []
    for _, row in frame.iterrows():
        name = row["algebra"]
        if name not in ref.index:
            diffs.append((name, "algebra", name, "<missing>"))
            continue
        for col in COLUMNS:
            if row[col] != ref.at[name, col]:
                diffs.append((name, col, row[col], ref.at[name, col]))
    return diffs


def expected_cells(name: str, reference: Optional[pd.DataFrame] = None) -> List[int]:
    """Columns marked realizable for a row of the checked-in rendering."""
    reference = reference if reference is not None else load_reference_grid()
    row = reference.set_index("algebra").loc[name]
    return [int(col) for col in COLUMNS if row[col] != EXCLUDED]
