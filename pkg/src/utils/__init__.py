"""Utility modules for lambda-theories"""

from .logger import get_logger, log_check_failure, setup_logging
from .mixins import CertifyingMixin, LoggerMixin

__all__ = [
    "CertifyingMixin",
    "LoggerMixin",
    "get_logger",
    "log_check_failure",
    "setup_logging",
]
