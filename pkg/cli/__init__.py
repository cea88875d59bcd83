"""
Command-line surface: argparse commands, the result cache and report tables.
"""

from cli.cache import CacheEntry, ResultCache
from cli.commands import EXIT_NONEXISTENT, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VERIFY, build_parser, run
from cli.report import ReportManager, ReportTable

__all__ = [
    "CacheEntry",
    "ResultCache",
    "EXIT_NONEXISTENT",
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_USAGE",
    "EXIT_VERIFY",
    "build_parser",
    "run",
    "ReportManager",
    "ReportTable",
]
