"""
JSON logger wrapper and cached factory.
"""

import logging
import sys
from typing import Dict, Optional, Union

from tmtb.core.logging.formatters import ISOJSONFormatter

ROOT_LOGGER = "tmtb"


def _coerce_level(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level: {level}")
    return value


class StderrHandler(logging.StreamHandler):
    """Stream handler writing to whatever `sys.stderr` is when a record is emitted."""

    def __init__(self, level: int = logging.NOTSET):
        logging.Handler.__init__(self, level)

    @property
    def stream(self):
        return sys.stderr


class JSONLogger:
    """Attach JSON handlers to a named logger."""

    def __init__(
        self, name: str, level: Union[int, str] = logging.INFO, log_file: Optional[str] = None
    ):
        """
        Initialize JSON logger.

        Args:
            name: Logger name
            level: Logging level
            log_file: Optional file path for file logging
        """
        level = _coerce_level(level)
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)
        self.logger.propagate = False
        self.logger.handlers.clear()

        formatter = ISOJSONFormatter("%(timestamp)s %(level)s %(logger_name)s %(message)s")

        console_handler = StderrHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def get_logger(self) -> logging.Logger:
        """Get the underlying logger instance."""
        return self.logger


_configured: Dict[str, logging.Logger] = {}


def configure_logging(
    level: Union[int, str] = logging.INFO, log_file: Optional[str] = None
) -> logging.Logger:
    """
    Install JSON handlers on the package root logger.

    Module loggers obtained through ``get_logger`` propagate to it, so this is
    called once per process (the CLI does it from ``--log-level``).

    Args:
        level: Logging level name or number
        log_file: Optional file path for file logging

    Returns:
        The configured package root logger
    """
    cache_key = f"{_coerce_level(level)}:{log_file}"
    if cache_key not in _configured:
        _configured.clear()
        _configured[cache_key] = JSONLogger(ROOT_LOGGER, level, log_file).get_logger()
    return _configured[cache_key]


def get_logger(name: str) -> logging.Logger:
    """
    Get a module logger under the package root.

    Args:
        name: Dotted module name, usually ``__name__``

    Returns:
        Logger instance
    """
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)
