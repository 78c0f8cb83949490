"""Search command: sample inner products and record realized signatures."""

from pathlib import Path
from typing import Optional

import click
from tabulate import tabulate

from ...algebra.catalog import make_spec
from ...config.models import Command, RunConfig
from ...search.models import SearchReport
from ...search.realizability import realizability_search
from ...search.report import grid_csv, search_grid, to_json
from ..common import OUTPUT_CHOICE, emit, get_config, handle_errors, tolerances_for


def render(report: SearchReport, output: str, timestamp: bool) -> str:
    if output == "json":
        return to_json(report, timestamp)
    if output == "csv":
        return grid_csv(search_grid(report))

    table = [
        [idx, w.signature, w.source, w.sample if w.sample is not None else "-", w.citation or ""]
        for idx, w in report.found.items()
    ]
    header = f"{report.algebra.label}: {report.samples_used} samples, seed {report.seed}"
    return header + "\n\n" + tabulate(table, headers=["Index", "Signature", "Source", "Sample", "Note"], tablefmt="grid")


@click.command("search")
@click.option("--algebra", "-a", required=True, help="Catalog family or slice")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--budget", "-n", type=int, default=None, help="Samples per channel (config default when omitted)")
@click.option("--seed", "-s", type=int, required=True, help="Sampler seed")
@click.option("--output", "-o", type=OUTPUT_CHOICE, default="table", help="Output format")
@click.option("--out-file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--workers", "-w", type=int, default=None, help="Worker threads")
@click.option("--no-timestamp", is_flag=True, help="Omit generated_at for byte-stable JSON")
@click.option("--tolerance", type=float, default=None, help="Relative zero threshold for the signature")
@click.pass_context
@handle_errors
def search_cmd(
    ctx: click.Context,
    algebra: str,
    alpha: Optional[float],
    beta: Optional[float],
    budget: Optional[int],
    seed: int,
    output: str,
    out_file: Optional[Path],
    workers: Optional[int],
    no_timestamp: bool,
    tolerance: Optional[float],
):
    """
    Search inner-product space for realizable Ricci signatures.

    The report is a function of (algebra, budget, seed) only; worker count
    does not change it.
    """
    cfg = get_config(ctx)
    run = RunConfig(
        command=Command.SEARCH,
        algebra=algebra,
        alpha=alpha,
        beta=beta,
        seed=seed,
        budget=budget if budget is not None else cfg.search.budget,
        output=output,
        tolerance_override=tolerance,
        workers=workers if workers is not None else cfg.search.workers,
        out_file=out_file,
        timestamp=not no_timestamp,
    )
    search = cfg.search.model_copy(update={"workers": run.workers})

    spec = make_spec(run.algebra, run.alpha, run.beta)
    report = realizability_search(spec, run.budget, run.seed, search, tolerances_for(cfg, run.tolerance_override))
    emit(render(report, run.output.value, run.timestamp), run.out_file)
