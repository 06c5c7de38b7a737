"""Tests for logging setup and context fields."""

import json
import logging

from ackermann_goodstein.logging import (
    JSONFormatter,
    LogContext,
    TextFormatter,
    get_logger,
    setup_logging,
)


class _Capture(logging.Handler):
    def __init__(self) -> None:
        super().__init__()
        self.records: list[logging.LogRecord] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.records.append(record)


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_json_handler(self):
        """JSON format installs the JSON formatter."""
        setup_logging(level="DEBUG", format="json")
        root = logging.getLogger("ackermann_goodstein")
        assert root.level == logging.DEBUG
        assert isinstance(root.handlers[0].formatter, JSONFormatter)
        assert not root.propagate

    def test_text_handler(self):
        """Text format installs the text formatter and replaces old handlers."""
        setup_logging(format="json")
        setup_logging(level="WARNING", format="text")
        root = logging.getLogger("ackermann_goodstein")
        assert len(root.handlers) == 1
        assert isinstance(root.handlers[0].formatter, TextFormatter)

    def test_logger_names(self):
        """Module loggers live under the package logger."""
        assert get_logger("core.goodstein").name == "ackermann_goodstein.core.goodstein"


class TestLogContext:
    """Tests for LogContext and the JSON formatter."""

    def test_fields_reach_json(self):
        """Context fields become top-level JSON keys."""
        logger = get_logger("tests.context")
        capture = _Capture()
        logger.addHandler(capture)
        logger.setLevel(logging.INFO)
        try:
            with LogContext(logger, seed=4, mode="symbolic"):
                logger.info("running")
            logger.info("after")
        finally:
            logger.removeHandler(capture)

        inside = json.loads(JSONFormatter().format(capture.records[0]))
        assert inside["message"] == "running"
        assert inside["seed"] == 4
        assert inside["mode"] == "symbolic"
        outside = json.loads(JSONFormatter().format(capture.records[1]))
        assert "seed" not in outside

    def test_nested_contexts(self):
        """Inner contexts add to the outer fields."""
        logger = get_logger("tests.nested")
        capture = _Capture()
        logger.addHandler(capture)
        logger.setLevel(logging.INFO)
        try:
            with LogContext(logger, suite="roundtrip"):
                with LogContext(logger, seed=7):
                    logger.info("case")
        finally:
            logger.removeHandler(capture)

        record = capture.records[0]
        assert record.suite == "roundtrip"
        assert record.seed == 7
