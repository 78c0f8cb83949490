"""Ricci command: curvature data of one metric Lie algebra."""

import json
import logging
from pathlib import Path
from typing import Optional, Tuple

import click
import pandas as pd
from tabulate import tabulate

from ...algebra.catalog import build_algebra, make_spec
from ...algebra.loader import load_algebra
from ...config.models import Command, RunConfig
from ...curvature.ricci import RicciData, ricci_operator
from ...errors import InvalidParams
from ...metric.core import A49Params, MetricLieAlgebra, canonical_a49, orthonormal_frame
from ...search.models import SCHEMA
from ..common import OUTPUT_CHOICE, emit, get_config, handle_errors, parse_metric, tolerances_for

logger = logging.getLogger(__name__)

CANONICAL_DEFAULTS = {"a": 1.0, "b": 1.0, "c": 0.0, "d": 0.0, "f": 0.0}


def build_metric_algebra(run: RunConfig, metric: str, canonical: dict) -> Tuple[str, MetricLieAlgebra]:
    """(label, MetricLieAlgebra) for the ricci command's inputs."""
    given = {k: v for k, v in canonical.items() if v is not None}

    if run.definition is not None:
        if given:
            raise InvalidParams("--a/--b/--c/--d/--f apply to A4_9 only, not to --definition")
        tensor = load_algebra(run.definition)
        return str(run.definition), orthonormal_frame(tensor, parse_metric(metric, tensor.dim))

    spec = make_spec(run.algebra, run.alpha, run.beta)
    if given:
        if run.algebra != "A4_9":
            raise InvalidParams("--a/--b/--c/--d/--f select a canonical frame of A4_9 only")
        if metric.strip().lower() != "identity":
            raise InvalidParams("A canonical A4_9 frame is already orthonormal; drop --metric")
        params = A49Params(**{**CANONICAL_DEFAULTS, **given}, beta=run.beta)
        label = f"{spec.label} canonical(" + ", ".join(f"{k}={v:g}" for k, v in params.to_dict().items()) + ")"
        return label, canonical_a49(params)

    tensor = build_algebra(spec)
    return spec.label, orthonormal_frame(tensor, parse_metric(metric, tensor.dim))


def render(label: str, data: RicciData, output: str) -> str:
    eigenvalues = [float(v) for v in data.eigenvalues]
    if output == "json":
        return json.dumps(
            {
                "schema": SCHEMA,
                "algebra": label,
                "ricci": data.ric.tolist(),
                "eigenvalues": eigenvalues,
                "signature": str(data.signature),
                "index": data.index,
                "scalar_curvature": data.scalar,
            },
            indent=2,
        )
    if output == "csv":
        row = {"algebra": label, "signature": str(data.signature), "index": data.index, "scalar": data.scalar}
        row.update({f"lambda{i + 1}": v for i, v in enumerate(eigenvalues)})
        return pd.DataFrame([row]).to_csv(index=False, lineterminator="\n")

    lines = [
        f"Algebra:          {label}",
        f"Signature:        {data.signature}",
        f"Index:            {data.index if data.index is not None else '-'}",
        f"Scalar curvature: {data.scalar:.12g}",
        "Eigenvalues:      " + ", ".join(f"{v:.12g}" for v in eigenvalues),
        "",
        "Ricci operator (orthonormal frame):",
        tabulate(data.ric.tolist(), tablefmt="grid", floatfmt=".10g"),
    ]
    return "\n".join(lines)


@click.command("ricci")
@click.option("--algebra", "-a", "algebra", default=None, help="Catalog family or slice, e.g. A3_9+A1")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--metric", "-m", default="identity", show_default=True,
              help="'identity', a file with the Gram matrix, or its entries inline")
@click.option("--a", "a_", type=float, default=None, help="Canonical A4_9 frame parameter a")
@click.option("--b", "b_", type=float, default=None, help="Canonical A4_9 frame parameter b")
@click.option("--c", "c_", type=float, default=None, help="Canonical A4_9 frame parameter c")
@click.option("--d", "d_", type=float, default=None, help="Canonical A4_9 frame parameter d")
@click.option("--f", "f_", type=float, default=None, help="Canonical A4_9 frame parameter f")
@click.option("--definition", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="JSON algebra definition instead of --algebra")
@click.option("--output", "-o", type=OUTPUT_CHOICE, default="table", help="Output format")
@click.option("--out-file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--tolerance", type=float, default=None, help="Relative zero threshold for the signature")
@click.pass_context
@handle_errors
def ricci_cmd(
    ctx: click.Context,
    algebra: Optional[str],
    alpha: Optional[float],
    beta: Optional[float],
    metric: str,
    a_: Optional[float],
    b_: Optional[float],
    c_: Optional[float],
    d_: Optional[float],
    f_: Optional[float],
    definition: Optional[Path],
    output: str,
    out_file: Optional[Path],
    tolerance: Optional[float],
):
    """
    Compute the Ricci operator, its spectrum and signature.

    Examples:
        ricci-sig ricci --algebra A3_9+A1
        ricci-sig ricci --algebra A4_9 --beta 0.5 --a 1 --b 3 --f 2
    """
    cfg = get_config(ctx)
    run = RunConfig(
        command=Command.RICCI,
        algebra=algebra,
        definition=definition,
        alpha=alpha,
        beta=beta,
        output=output,
        tolerance_override=tolerance,
        out_file=out_file,
    )
    tolerances = tolerances_for(cfg, run.tolerance_override)

    label, m = build_metric_algebra(run, metric, {"a": a_, "b": b_, "c": c_, "d": d_, "f": f_})
    data = ricci_operator(m, tolerances.zero_rel)
    logger.info("%s: signature %s", label, data.signature)

    emit(render(label, data, run.output.value), run.out_file)
