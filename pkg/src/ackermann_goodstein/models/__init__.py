"""Pydantic documents for traces and verification reports."""

from ackermann_goodstein.models.report import SuiteReportModel
from ackermann_goodstein.models.trace import TraceDocument, TraceEntryModel, TraceOutcomeModel

__all__ = ["SuiteReportModel", "TraceDocument", "TraceEntryModel", "TraceOutcomeModel"]
