"""Reports: classification rows, check records and their JSON/CSV/text forms."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any

from ..utils.constants import REPORT_SCHEMA_VERSION
from ..utils.io import to_serializable

ROW_COLUMNS = [
    "n",
    "rho",
    "lambda",
    "offset",
    "discrete_parity",
    "even_discrete",
    "odd_discrete",
    "even_in_L2",
    "odd_in_L2",
    "even_tempered",
    "odd_tempered",
    "d_lambda_head",
    "multiplicity_full",
    "multiplicity_temp",
    "theorem2",
]

CHECK_COLUMNS = ["suite", "name", "parameters", "max_residual", "tolerance", "status"]


@dataclass(frozen=True)
class CheckRecord:
    """One verification: a residual against a tolerance, or an exact yes/no.

    Exact checks carry ``tolerance = None``. A skipped check has ``passed = None``.
    """

    suite: str
    name: str
    parameters: dict[str, Any]
    max_residual: float
    tolerance: float | None
    passed: bool | None
    note: str = ""

    @classmethod
    def numerical(
        cls, suite: str, name: str, parameters: dict[str, Any], residual: float, tolerance: float
    ) -> CheckRecord:
        residual = float(residual)
        passed = math.isfinite(residual) and residual < tolerance
        return cls(suite, name, to_serializable(parameters), residual, float(tolerance), passed)

    @classmethod
    def exact(cls, suite: str, name: str, parameters: dict[str, Any], ok: bool) -> CheckRecord:
        return cls(suite, name, to_serializable(parameters), 0.0 if ok else 1.0, None, bool(ok))

    @classmethod
    def skipped(cls, suite: str, name: str, parameters: dict[str, Any], note: str) -> CheckRecord:
        return cls(suite, name, to_serializable(parameters), 0.0, None, None, note)

    @classmethod
    def error(cls, suite: str, parameters: dict[str, Any], message: str) -> CheckRecord:
        return cls(suite, "error", to_serializable(parameters), math.inf, None, False, message)

    @property
    def status(self) -> str:
        if self.passed is None:
            return "skipped"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "name": self.name,
            "parameters": self.parameters,
            "max_residual": to_serializable(self.max_residual),
            "tolerance": self.tolerance,
            "status": self.status,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CheckRecord:
        passed = {"pass": True, "fail": False, "skipped": None}[data["status"]]
        tolerance = data["tolerance"]
        return cls(
            suite=data["suite"],
            name=data["name"],
            parameters=data["parameters"],
            max_residual=float(data["max_residual"]),
            tolerance=None if tolerance is None else float(tolerance),
            passed=passed,
            note=data.get("note", ""),
        )


@dataclass
class Report:
    """Output of ``classify`` (rows) or ``verify`` (checks)."""

    command: str
    config: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        statuses = [check.status for check in self.checks]
        return {
            "passed": statuses.count("pass"),
            "failed": statuses.count("fail"),
            "skipped": statuses.count("skipped"),
        }

    @property
    def exit_status(self) -> int:
        return 1 if self.summary["failed"] else 0

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "version": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "config": to_serializable(self.config),
        }
        if self.command == "classify":
            data["rows"] = [to_serializable(row) for row in self.rows]
        else:
            data["checks"] = [check.to_dict() for check in self.checks]
            data["summary"] = self.summary
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        if data.get("version") != REPORT_SCHEMA_VERSION:
            raise ValueError(f"Unsupported report version: {data.get('version')!r}")
        return cls(
            command=data["command"],
            config=data["config"],
            rows=list(data.get("rows", [])),
            checks=[CheckRecord.from_dict(check) for check in data.get("checks", [])],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.command == "classify":
            writer.writerow(ROW_COLUMNS)
            for row in self.rows:
                writer.writerow([_cell(row.get(column)) for column in ROW_COLUMNS])
        else:
            writer.writerow(CHECK_COLUMNS)
            for check in self.checks:
                record = check.to_dict()
                writer.writerow([_cell(record[column]) for column in CHECK_COLUMNS])
        return buffer.getvalue()

    def to_text(self) -> str:
        if self.command == "classify":
            columns = ["n", "lambda", "offset", "discrete_parity", "d_lambda_head",
                       "multiplicity_full", "multiplicity_temp", "theorem2"]
            table = [[_cell(row.get(column)) for column in columns] for row in self.rows]
            return _format_table(columns, table)

        columns = ["suite", "name", "parameters", "max_residual", "tolerance", "status"]
        table = [
            [
                check.suite,
                check.name,
                _cell(check.parameters),
                f"{check.max_residual:.3e}",
                "exact" if check.tolerance is None else f"{check.tolerance:.0e}",
                check.status if not check.note else f"{check.status} ({check.note})",
            ]
            for check in self.checks
        ]
        summary = self.summary
        footer = (
            f"passed: {summary['passed']}, failed: {summary['failed']}, "
            f"skipped: {summary['skipped']}"
        )
        return _format_table(columns, table) + footer + "\n"

    def render(self, output_format: str) -> str:
        renderers = {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}
        return renderers[output_format]()


def _cell(value: Any) -> str:
    value = to_serializable(value)
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _format_table(columns: list[str], table: list[list[str]]) -> str:
    widths = [
        max([len(column)] + [len(row[i]) for row in table])
        for i, column in enumerate(columns)
    ]
    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths))]
    lines.extend(
        "  ".join(value.ljust(width) for value, width in zip(row, widths)) for row in table
    )
    return "\n".join(lines) + "\n"
