"""
Command-line surface: subcommand handlers and result rendering.
"""

from .commands import COMMANDS, SUITES, EXIT_OK, EXIT_FAILED, EXIT_USAGE, parse_int_list, parse_weight_list
from .render import TABLE, RECORDS, render, emit, diagnostic

__all__ = [
    "COMMANDS",
    "SUITES",
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
    "parse_int_list",
    "parse_weight_list",
    "TABLE",
    "RECORDS",
    "render",
    "emit",
    "diagnostic",
]
