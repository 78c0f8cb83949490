"""Configuration module."""

from .models import (
    Command,
    Config,
    LoggingConfig,
    OutputFormat,
    RunConfig,
    SearchConfig,
    TolerancesConfig,
    load_config,
)

__all__ = [
    "Command",
    "Config",
    "LoggingConfig",
    "OutputFormat",
    "RunConfig",
    "SearchConfig",
    "TolerancesConfig",
    "load_config",
]
