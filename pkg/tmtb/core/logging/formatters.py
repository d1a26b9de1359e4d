"""
Log formatters.
"""

from datetime import datetime, timezone

from pythonjsonlogger import jsonlogger


class ISOJSONFormatter(jsonlogger.JsonFormatter):
    """JSON formatter with ISO 8601 timestamps and solver context."""

    def add_fields(self, log_record, record, message_dict):
        """Customize log record fields."""
        super().add_fields(log_record, record, message_dict)

        if not log_record.get("timestamp"):
            log_record["timestamp"] = datetime.now(timezone.utc).isoformat()
        log_record["level"] = record.levelname
        log_record["logger_name"] = record.name
        log_record["module"] = record.module
        log_record["function"] = record.funcName
        log_record["line"] = record.lineno
        log_record["thread_id"] = record.thread

        if hasattr(record, "context"):
            log_record["context"] = record.context

        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)
