"""Logging setup."""

from .logging_config import InterceptHandler, get_logger, setup_logging

__all__ = ["InterceptHandler", "get_logger", "setup_logging"]
