"""Command-line front end: classification tables, verification suites and exports."""

from .config import RunConfig
from .report import CheckRecord, Report
from .commands import classify_cell, cmd_classify, cmd_verify
from .suites import SUITE_NAMES, run_suites
from .export import cmd_export, write_report
from .main import main

__all__ = [
    "RunConfig",
    "CheckRecord",
    "Report",
    "classify_cell",
    "cmd_classify",
    "cmd_verify",
    "SUITE_NAMES",
    "run_suites",
    "cmd_export",
    "write_report",
    "main",
]
