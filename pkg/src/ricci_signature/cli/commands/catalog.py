"""Catalog command: list the cataloged families and unimodular slices."""

import json
from pathlib import Path
from typing import Optional

import click
import pandas as pd
from tabulate import tabulate

from ...algebra.catalog import list_catalog, list_slices
from ...search.models import SCHEMA
from ..common import OUTPUT_CHOICE, emit, handle_errors


def _rows():
    return [
        {"name": row.family, "kind": "family", "params": list(row.params), "constraints": list(row.constraints)}
        for row in list_catalog()
    ] + [
        {"name": row.family, "kind": "slice", "params": list(row.params), "constraints": list(row.constraints)}
        for row in list_slices()
    ]


@click.command("catalog")
@click.option("--output", "-o", type=OUTPUT_CHOICE, default="table", help="Output format")
@click.option("--out-file", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the listing to a file instead of stdout")
@handle_errors
def catalog_cmd(output: str, out_file: Optional[Path]):
    """List the 24 families and the named unimodular slices."""
    rows = _rows()
    if output == "json":
        text = json.dumps({"schema": SCHEMA, "algebras": rows}, indent=2)
    elif output == "csv":
        frame = pd.DataFrame(
            [
                {
                    "name": r["name"],
                    "kind": r["kind"],
                    "params": " ".join(r["params"]),
                    "constraints": "; ".join(r["constraints"]),
                }
                for r in rows
            ]
        )
        text = frame.to_csv(index=False, lineterminator="\n")
    else:
        table = [[r["name"], r["kind"], ", ".join(r["params"]) or "-", "; ".join(r["constraints"]) or "-"] for r in rows]
        text = tabulate(table, headers=["Name", "Kind", "Params", "Constraints"], tablefmt="grid")
        families = sum(r["kind"] == "family" for r in rows)
        text += f"\n\nTotal: {families} families, {len(rows) - families} slices"

    emit(text, out_file)
