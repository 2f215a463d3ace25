"""Named check suites and their runner"""

from .identities import core_identities
from .runner import SUITE_ALIASES, SUITES, SuiteOptions, SuiteRunner

__all__ = ["SUITES", "SUITE_ALIASES", "SuiteOptions", "SuiteRunner", "core_identities"]
