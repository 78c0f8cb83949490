"""Main CLI entry point for ricci-sig."""

import sys

import click
from dotenv import load_dotenv

from .. import __version__
from ..config.models import Config, load_config
from ..errors import exit_code_for
from ..monitoring.logging_config import setup_logging
from .commands import catalog, ricci, search, verify


@click.group()
@click.version_option(version=__version__, prog_name="ricci-sig")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration file (defaults apply when omitted)")
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level")
@click.pass_context
def cli(ctx: click.Context, config_path: str, verbose: bool):
    """
    Ricci signatures of left-invariant metrics on four-dimensional Lie groups.

    Compute Ricci operators, search for realizable signatures and verify
    the published classification.
    """
    load_dotenv()
    try:
        cfg = load_config(config_path) if config_path else Config()
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(exit_code_for(e))

    if verbose:
        cfg = cfg.model_copy(update={"logging": cfg.logging.model_copy(update={"level": "DEBUG"})})
    setup_logging(cfg.logging)

    ctx.ensure_object(dict)
    ctx.obj["config"] = cfg


# Register commands
cli.add_command(catalog.catalog_cmd)
cli.add_command(ricci.ricci_cmd)
cli.add_command(search.search_cmd)
cli.add_command(verify.verify_cmd)


if __name__ == "__main__":
    cli()
