"""Writing reports and profile datasets to disk."""

from __future__ import annotations

from collections.abc import Iterable

from .commands import cmd_classify, cmd_verify
from .config import RunConfig
from .report import Report
from ..profiles import make_profile_dataset, write_profile_nc
from ..utils.decorators import handle_file_errors
from ..utils.errors import UsageError
from ..utils.io import build_output_path

EXPORT_KINDS = ("table", "report", "profiles")


@handle_file_errors("report")
def write_report(report: Report, path: str, output_format: str = "json") -> str:
    """Write a report as JSON, CSV or text.

    Returns
    -------
    str
        The path written.
    """
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(report.render(output_format))
    return path


def cmd_export(
    config: RunConfig,
    what: str,
    path: str,
    suites: Iterable[str] | None = None,
) -> str:
    """Build a classification table, a verification report or a profile dataset and write it.

    Parameters
    ----------
    config : RunConfig
        Sweep and output format. Profiles are always written as netCDF.
    what : {"table", "report", "profiles"}
        What to export.
    path : str
        File path, or an existing directory to place a generated file name in.
    suites : iterable of str, optional
        Suites of the ``report`` export; all by default.

    Returns
    -------
    str
        The path written.

    Raises
    ------
    UsageError
        On an unknown export kind.
    OSError
        If the file cannot be written.
    """
    if what not in EXPORT_KINDS:
        raise UsageError(f"Unknown export kind: {what}. Valid options: {list(EXPORT_KINDS)}")

    if what == "profiles":
        output_path = build_output_path(path, what, "netcdf")
        write_profile_nc(make_profile_dataset(config), output_path)
        return output_path

    output_path = build_output_path(path, what, config.output_format)
    report = cmd_classify(config) if what == "table" else cmd_verify(config, suites)
    return write_report(report, output_path, config.output_format)
