"""Integration fixtures: a Click runner and a quiet configuration file."""

import pytest
from click.testing import CliRunner
from loguru import logger

from src.ricci_signature.cli.main import cli


@pytest.fixture(autouse=True)
def drop_log_sinks():
    """Sinks bound to the runner's captured stderr must not outlive the test."""
    yield
    logger.remove()


@pytest.fixture
def runner():
    """Runner with stderr kept apart from stdout."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 dropped mix_stderr and always separates the streams
        return CliRunner()


@pytest.fixture
def quiet_config(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("logging:\n  level: WARNING\n  colorize_console: false\nsearch:\n  chunk_size: 128\n")
    return str(path)


@pytest.fixture
def invoke(runner, quiet_config):
    """Run ricci-sig with the quiet configuration."""
    return lambda *args: runner.invoke(cli, ["--config", quiet_config, *args])
