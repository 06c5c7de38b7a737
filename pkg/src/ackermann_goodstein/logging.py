"""Structured logging configuration for the Goodstein toolkit.

Supports both JSON and text output formats. JSON lines are meant for
reproducible experiment logs next to the trace files.
"""

import json
import logging
import sys
import threading
from contextvars import ContextVar, Token
from datetime import datetime, timezone
from typing import Any, Literal, Optional

# Record attributes promoted to top-level JSON keys when a LogContext sets them
CONTEXT_FIELDS = ("seed", "step", "base", "suite", "mode")


class JSONFormatter(logging.Formatter):
    """Structured JSON log formatter."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        if hasattr(record, "extra") and isinstance(record.extra, dict):
            log_data.update(record.extra)

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for field in CONTEXT_FIELDS:
            if hasattr(record, field):
                log_data[field] = getattr(record, field)

        return json.dumps(log_data, default=str)


class TextFormatter(logging.Formatter):
    """Human-readable text formatter for terminals."""

    def __init__(self) -> None:
        super().__init__(
            fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )


def setup_logging(
    level: str = "INFO",
    format: Literal["json", "text"] = "text",
) -> None:
    """Configure toolkit logging.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format: Output format ("json" for experiment logs, "text" for terminals)

    Example:
        >>> setup_logging(level="DEBUG", format="text")
        >>> logger = get_logger("goodstein")
        >>> logger.info("Run started")
    """
    root_logger = logging.getLogger("ackermann_goodstein")
    root_logger.setLevel(getattr(logging, level.upper()))

    root_logger.handlers.clear()

    # stderr keeps stdout clean for term / JSON output of the CLI
    handler = logging.StreamHandler(sys.stderr)

    if format == "json":
        handler.setFormatter(JSONFormatter())
    else:
        handler.setFormatter(TextFormatter())

    root_logger.addHandler(handler)
    root_logger.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a module.

    Args:
        name: Module name (will be prefixed with "ackermann_goodstein.")

    Returns:
        Configured logger instance

    Example:
        >>> logger = get_logger("core.goodstein")
        >>> logger.debug("Step done", extra={"step": 3})
    """
    return logging.getLogger(f"ackermann_goodstein.{name}")


_context: ContextVar[dict[str, Any]] = ContextVar("ackermann_goodstein_log_context")
_factory_lock = threading.Lock()
_factory_installed = False


def _install_record_factory() -> None:
    global _factory_installed
    with _factory_lock:
        if _factory_installed:
            return
        base_factory = logging.getLogRecordFactory()

        def record_factory(*args: Any, **kwargs: Any) -> logging.LogRecord:
            record = base_factory(*args, **kwargs)
            for key, value in _context.get({}).items():
                setattr(record, key, value)
            return record

        logging.setLogRecordFactory(record_factory)
        _factory_installed = True


class LogContext:
    """Context manager for adding extra fields to log records.

    Fields live in a context variable, so worker threads running separate
    seeds each see only their own fields.

    Example:
        >>> with LogContext(logger, seed=4, mode="symbolic"):
        ...     logger.info("running")
    """

    def __init__(self, logger: logging.Logger, **fields: Any) -> None:
        self.logger = logger
        self.fields = fields
        self._token: Optional[Token[dict[str, Any]]] = None

    def __enter__(self) -> logging.Logger:
        _install_record_factory()
        self._token = _context.set({**_context.get({}), **self.fields})
        return self.logger

    def __exit__(self, *args: Any) -> None:
        if self._token is not None:
            _context.reset(self._token)
            self._token = None
