"""Verify command: run the realizability grid, A4_9 regime or identities suite."""

from pathlib import Path
from typing import Optional

import click
import pandas as pd
from tabulate import tabulate

from ...config.models import Command, RunConfig
from ...errors import VerificationFailed
from ...search.report import grid_csv, table3_grid, to_json
from ...search.table3 import Table3Report, verify_table3
from ...verification.conformance import ConformanceReport, run_identities
from ...verification.proposition import DEFAULT_GRID, Prop1Report, verify_prop1
from ..common import OUTPUT_CHOICE, emit, get_config, handle_errors, tolerances_for

SUITES = ("table3", "prop1", "identities")


def _mark(passed: bool) -> str:
    return "ok" if passed else "FAIL"


def render_table3(report: Table3Report, output: str, timestamp: bool) -> str:
    if output == "json":
        return to_json(report, timestamp)
    if output == "csv":
        return grid_csv(table3_grid(report))
    table = [
        [r.name, _mark(r.passed), " ".join(map(str, r.witnessed)), " ".join(map(str, r.missing)) or "-",
         " ".join(map(str, r.violations)) or "-"]
        for r in report.rows
    ]
    return tabulate(table, headers=["Algebra", "Status", "Witnessed", "Missing", "Unexpected"], tablefmt="grid")


def render_prop1(report: Prop1Report, output: str, timestamp: bool) -> str:
    if output == "json":
        return to_json(report, timestamp)
    rows = [
        {
            "beta": r.beta,
            "regime": r.regime,
            "expected": " ".join(map(str, r.expected)),
            "witnessed": " ".join(map(str, r.witnessed)),
            "outside": " ".join(map(str, r.outside)),
            "passed": r.passed,
        }
        for r in report.results
    ]
    if output == "csv":
        return pd.DataFrame(rows).to_csv(index=False, lineterminator="\n")
    table = [[r["beta"], r["regime"], r["expected"], r["witnessed"], r["outside"] or "-", _mark(r["passed"])]
             for r in rows]
    return tabulate(table, headers=["beta", "Regime", "Expected", "Witnessed", "Outside", "Status"], tablefmt="grid")


def render_identities(report: ConformanceReport, output: str, timestamp: bool) -> str:
    if output == "json":
        return to_json(report, timestamp)
    frame = pd.DataFrame([r.model_dump() for r in report.records])
    if output == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    table = [
        [r.name, r.samples, "-" if r.max_residual is None else f"{r.max_residual:.3e}", f"{r.tolerance:.0e}",
         _mark(r.passed)]
        for r in report.records
    ]
    return tabulate(table, headers=["Identity", "Samples", "Max residual", "Tolerance", "Status"], tablefmt="grid")


@click.command("verify")
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--seed", "-s", type=int, required=True, help="Seed for every random draw")
@click.option("--budget", "-n", type=int, default=None, help="Samples per algebra / beta / family")
@click.option("--output", "-o", type=OUTPUT_CHOICE, default="table", help="Output format")
@click.option("--out-file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--workers", "-w", type=int, default=None, help="Worker threads")
@click.option("--no-timestamp", is_flag=True, help="Omit generated_at for byte-stable JSON")
@click.pass_context
@handle_errors
def verify_cmd(
    ctx: click.Context,
    suite: str,
    seed: int,
    budget: Optional[int],
    output: str,
    out_file: Optional[Path],
    workers: Optional[int],
    no_timestamp: bool,
):
    """
    Run a verification suite; exits 1 when any check fails.

    SUITE is one of table3, prop1, identities.
    """
    cfg = get_config(ctx)
    run = RunConfig(
        command=Command.VERIFY,
        suite=suite,
        seed=seed,
        budget=budget if budget is not None else cfg.search.budget,
        output=output,
        workers=workers if workers is not None else cfg.search.workers,
        out_file=out_file,
        timestamp=not no_timestamp,
    )
    search = cfg.search.model_copy(update={"workers": run.workers})
    tolerances = tolerances_for(cfg, None)

    if run.suite == "table3":
        report = verify_table3(run.budget, run.seed, search, tolerances)
        text = render_table3(report, run.output.value, run.timestamp)
    elif run.suite == "prop1":
        report = verify_prop1(DEFAULT_GRID, run.budget, run.seed, search, tolerances)
        text = render_prop1(report, run.output.value, run.timestamp)
    else:
        report = run_identities(run.seed, budget=run.budget, search=search, tolerances=tolerances)
        text = render_identities(report, run.output.value, run.timestamp)

    emit(text, run.out_file)
    if not report.passed:
        raise VerificationFailed(f"Suite '{run.suite}' failed")
