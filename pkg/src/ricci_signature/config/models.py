"""Pydantic models for configuration."""

import os
import re
from enum import Enum
from pathlib import Path
from typing import List, Optional, Union

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator


class TolerancesConfig(BaseModel):
    jacobi_rel: float = Field(default=1e-12, gt=0)
    zero_rel: float = Field(default=1e-9, gt=0)  # Classification threshold
    structural_rel: float = Field(default=1e-11, gt=0)  # Random-search zeros
    symmetry_rel: float = Field(default=1e-12, gt=0)
    bisect_rel: float = Field(default=1e-10, gt=0)
    identity_rel: float = Field(default=1e-9, gt=0)  # Conformance residual bound

    @model_validator(mode="after")
    def validate_ordering(self) -> "TolerancesConfig":
        """Structural zeros must be tighter than classification zeros."""
        if self.structural_rel > self.zero_rel:
            raise ValueError(
                f"structural_rel ({self.structural_rel}) must not exceed zero_rel ({self.zero_rel})"
            )
        return self


class SearchConfig(BaseModel):
    budget: int = Field(default=2000, ge=1)
    spd_delta: float = Field(default=1e-3, gt=0)
    product_fraction: float = Field(default=0.5, ge=0, le=1)
    chunk_size: int = Field(default=512, ge=1)
    workers: int = Field(default=1, ge=1)
    grid_points: int = Field(default=5, ge=1)


class LoggingConfig(BaseModel):
    level: str = "INFO"
    file_path: Optional[str] = None  # Console only when unset
    rotation: str = "10 MB"
    retention: str = "14 days"
    json_format: bool = False
    colorize_console: bool = True

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{v}'")
        return level


class Config(BaseModel):
    tolerances: TolerancesConfig = Field(default_factory=TolerancesConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class Command(str, Enum):
    CATALOG = "catalog"
    RICCI = "ricci"
    SEARCH = "search"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """One command-line invocation after flag parsing."""

    command: Command
    algebra: Optional[str] = None  # Catalog alias or slice name
    definition: Optional[Path] = None  # JSON algebra file instead of a catalog name
    alpha: Optional[float] = None
    beta: Optional[float] = None
    seed: Optional[int] = None
    budget: int = Field(default=2000, ge=1)
    output: OutputFormat = OutputFormat.TABLE
    tolerance_override: Optional[float] = Field(default=None, gt=0)
    suite: Optional[str] = None
    workers: int = Field(default=1, ge=1)
    out_file: Optional[Path] = None
    timestamp: bool = True

    @field_validator("suite")
    @classmethod
    def validate_suite(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in {"table3", "prop1", "identities"}:
            raise ValueError(f"Unknown verification suite '{v}'")
        return v

    @model_validator(mode="after")
    def validate_command(self) -> "RunConfig":
        if self.command in (Command.SEARCH, Command.VERIFY) and self.seed is None:
            raise ValueError(f"'{self.command.value}' requires an explicit seed")
        if self.command == Command.SEARCH and not self.algebra:
            raise ValueError("'search' requires an algebra")
        if self.command == Command.RICCI and not (self.algebra or self.definition):
            raise ValueError("'ricci' requires an algebra or a definition file")
        if self.command == Command.VERIFY and self.suite is None:
            raise ValueError("'verify' requires a suite")
        return self


def expand_env_vars(obj):
    """Replace ${VAR} with the environment value (left as-is when unset)."""
    if isinstance(obj, dict):
        return {k: expand_env_vars(v) for k, v in obj.items()}
    elif isinstance(obj, list):
        return [expand_env_vars(item) for item in obj]
    elif isinstance(obj, str):
        pattern = re.compile(r'\$\{([^}]+)\}')

        def replace_match(match):
            value = os.getenv(match.group(1))
            return value if value is not None else match.group(0)

        return pattern.sub(replace_match, obj)
    return obj


def load_config(config_path: Union[str, Path] = "config.yaml") -> Config:
    """
    Load configuration from YAML file.

    Args:
        config_path: Path to config YAML file

    Returns:
        Config instance

    Raises:
        FileNotFoundError: If config file doesn't exist
        ValidationError: If config is invalid
    """
    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        config_dict = yaml.safe_load(f) or {}

    return Config(**expand_env_vars(config_dict))
