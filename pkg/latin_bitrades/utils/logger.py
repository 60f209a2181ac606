"""
Logger Module

This module configures the latin_bitrades logger hierarchy. Handlers are
attached to the package logger, not the root, so embedding applications
keep their own logging setup.
"""

import logging
import os
from typing import Any, Dict, Optional

LOGGER_NAME = "latin_bitrades"
DEFAULT_LOG_LEVEL = logging.WARNING
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_LOG_FILE = os.path.join("logs", "latin_bitrades.log")


def resolve_log_file(value: Any) -> Optional[str]:
    """
    Map the ``file`` setting to a path.

    ``true`` selects DEFAULT_LOG_FILE; a string is used as given; anything
    falsy disables file logging.
    """
    if value is True:
        return DEFAULT_LOG_FILE
    if not value:
        return None
    return str(value)


def setup_logging(config: Optional[Dict[str, Any]] = None) -> logging.Logger:
    """
    Set up the package logger from the ``logging`` configuration section.

    Args:
        config: Mapping with optional ``level``, ``format`` and ``file`` keys

    Returns:
        The configured package logger
    """
    if config is None:
        config = {}

    log_level_str = str(config.get("level", logging.getLevelName(DEFAULT_LOG_LEVEL)))
    log_level = getattr(logging, log_level_str.upper(), DEFAULT_LOG_LEVEL)
    formatter = logging.Formatter(config.get("format", DEFAULT_LOG_FORMAT))
    log_file = resolve_log_file(config.get("file"))

    package_logger = logging.getLogger(LOGGER_NAME)
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()
    package_logger.setLevel(log_level)
    package_logger.propagate = False

    handlers = [logging.StreamHandler()]
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, mode="a"))

    for handler in handlers:
        handler.setLevel(log_level)
        handler.setFormatter(formatter)
        package_logger.addHandler(handler)
    return package_logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger inside the package hierarchy.

    Args:
        name: Name for the logger, typically __name__; names outside the
            package are nested under it

    Returns:
        Logger instance
    """
    if name != LOGGER_NAME and not name.startswith(LOGGER_NAME + "."):
        name = f"{LOGGER_NAME}.{name}"
    return logging.getLogger(name)
