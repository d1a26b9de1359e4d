"""
Structured JSON logging with ISO 8601 timestamps.

Solver progress, parse warnings and benchmark timings are emitted as one JSON
object per line on stderr so they never mix with command output on stdout.
"""

from tmtb.core.logging.formatters import ISOJSONFormatter
from tmtb.core.logging.json_logger import JSONLogger, configure_logging, get_logger

__all__ = ["JSONLogger", "get_logger", "configure_logging", "ISOJSONFormatter"]
