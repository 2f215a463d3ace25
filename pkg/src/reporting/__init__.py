"""Check records, suite reports and the builder that assembles them"""

from .builder import Aggregate, ReportBuilder
from .models import (
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    EXIT_REFUTED,
    EXIT_USAGE,
    SCHEMA_VERSION,
    CheckRecord,
    SuiteReport,
    Summary,
)

__all__ = [
    "Aggregate",
    "CheckRecord",
    "EXIT_INCONCLUSIVE",
    "EXIT_PASS",
    "EXIT_REFUTED",
    "EXIT_USAGE",
    "ReportBuilder",
    "SCHEMA_VERSION",
    "SuiteReport",
    "Summary",
]
