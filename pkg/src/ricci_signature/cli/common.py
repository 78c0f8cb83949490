"""Helpers shared by the ricci-sig commands."""

import functools
import json
import re
import sys
from pathlib import Path
from typing import Callable, Optional

import click
import numpy as np

from ..config.models import Config, OutputFormat, TolerancesConfig
from ..errors import DimensionMismatch, exit_code_for
from ..metric.core import InnerProduct
from ..monitoring.logging_config import get_logger

log = get_logger(__name__)

OUTPUT_CHOICE = click.Choice([f.value for f in OutputFormat])


def handle_errors(func: Callable) -> Callable:
    """Print ``Error: ...`` on stderr and exit with the mapped code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except Exception as e:
            log.opt(exception=e).debug("{} failed", func.__name__)
            click.echo(f"Error: {e}", err=True)
            sys.exit(exit_code_for(e))

    return wrapper


def get_config(ctx: click.Context) -> Config:
    return ctx.obj["config"] if ctx.obj and "config" in ctx.obj else Config()


def tolerances_for(cfg: Config, override: Optional[float]) -> TolerancesConfig:
    """Config tolerances with --tolerance replacing the classification threshold."""
    if override is None:
        return cfg.tolerances
    structural = min(cfg.tolerances.structural_rel, override)
    return cfg.tolerances.model_copy(update={"zero_rel": override, "structural_rel": structural})


def parse_metric(text: str, dim: int) -> InnerProduct:
    """
    Interpret the --metric value.

    Args:
        text: ``identity``, a path to a file holding dim*dim numbers (JSON
            list or whitespace/comma separated), or the numbers inline
        dim: Dimension of the algebra

    Raises:
        DimensionMismatch: Wrong count of numbers
        NotPositiveDefinite: Matrix fails the Gram checks
    """
    if text.strip().lower() == "identity":
        return InnerProduct.identity(dim)

    path = Path(text)
    if path.is_file():
        text = path.read_text(encoding="utf-8")

    try:
        values = np.asarray(json.loads(text), dtype=float).ravel()
    except (json.JSONDecodeError, TypeError, ValueError):
        tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        try:
            values = np.array([float(t) for t in tokens])
        except ValueError as e:
            raise DimensionMismatch(f"Metric must be 'identity', a file, or {dim * dim} numbers") from e
    return InnerProduct.from_flat(values, dim)


def emit(text: str, out_file: Optional[Path]) -> None:
    """Write a rendered report to --out-file, or stdout when unset."""
    if out_file is None:
        click.echo(text)
        return
    out_file.parent.mkdir(parents=True, exist_ok=True)
    out_file.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    click.echo(f"Report written to {out_file}", err=True)
