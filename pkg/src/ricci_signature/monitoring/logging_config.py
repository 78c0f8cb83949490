"""Logging configuration for ricci-sig.

Configures Loguru:
- Console output on stderr (colored, human-readable), so reports on stdout stay clean
- Optional rotated file output, plain or JSON-serialized

Library modules log through ``logging.getLogger(__name__)``; an intercept
handler forwards those records to Loguru.
"""

import inspect
import logging
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from ..config.models import LoggingConfig

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

PLAIN_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message}"


class InterceptHandler(logging.Handler):
    """Route stdlib logging records into Loguru, keeping the caller's location."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = inspect.currentframe(), 0
        while frame is not None and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(config: Optional[LoggingConfig] = None) -> None:
    """Configure logging system.

    Args:
        config: Logging configuration (uses defaults if None)
    """
    if config is None:
        config = LoggingConfig()

    logger.remove()

    logger.add(
        sys.stderr,
        level=config.level,
        format=CONSOLE_FORMAT if config.colorize_console else PLAIN_FORMAT,
        colorize=config.colorize_console,
    )

    if config.file_path:
        Path(config.file_path).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            config.file_path,
            rotation=config.rotation,
            retention=config.retention,
            level=config.level,
            format=PLAIN_FORMAT,
            serialize=config.json_format,
            backtrace=True,
            diagnose=False,
        )

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    logger.debug("Logging configured: level={}, file={}", config.level, config.file_path)


def get_logger(name: str):
    """Loguru logger bound to a component name."""
    return logger.bind(name=name)
