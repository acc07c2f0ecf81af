"""Logging utilities for parabolic-kl."""

import logging
import os
import sys
from typing import Optional, Union

PACKAGE_LOGGER = "parabolic_kl"


def _resolve_level(level: Optional[Union[int, str]]) -> int:
    if level is None:
        level = os.getenv("PKL_LOG_LEVEL", "WARNING")
    if isinstance(level, str):
        value = logging.getLevelName(level.upper())
        return value if isinstance(value, int) else logging.WARNING
    return level


def setup_logger(name: str = PACKAGE_LOGGER, level: Optional[Union[int, str]] = None) -> logging.Logger:
    """
    Set up logger with consistent formatting.

    Output goes to stderr; stdout carries only tables, polynomials and
    reports.

    Args:
        name: Logger name
        level: Logging level (default: PKL_LOG_LEVEL or WARNING)

    Returns:
        Configured logger instance
    """
    level = _resolve_level(level)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid adding multiple handlers
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    handler.setFormatter(formatter)

    logger.addHandler(handler)
    logger.propagate = False
    return logger


def set_log_level(level: Union[int, str]) -> None:
    """Change the level of every logger created through setup_logger."""
    level = _resolve_level(level)
    for name in list(logging.root.manager.loggerDict):
        if name == PACKAGE_LOGGER or name.startswith(PACKAGE_LOGGER + "."):
            logger = logging.getLogger(name)
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
