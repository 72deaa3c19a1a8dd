import math
import os
from enum import Enum
from fractions import Fraction

import numpy as np
import pytest

from hypspec.core.specfun import ExactScalar
from hypspec.utils.decorators import handle_file_errors
from hypspec.utils.io import build_output_path, format_float, to_serializable
from hypspec.utils.parallel import process_cells


class Color(Enum):
    RED = "red"


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (Fraction(5, 2), "5/2"),
        (Fraction(4), "4"),
        (np.int64(3), 3),
        (np.float64(0.25), 0.25),
        (np.bool_(True), True),
        (1 + 2j, {"real": 1.0, "imag": 2.0}),
        (3 + 0j, 3.0),
        (ExactScalar(Fraction(4, 3), -2), "4/3*pi^(-2/2)"),
        (Color.RED, "red"),
        (None, None),
        ({"a": (Fraction(1, 3), [math.inf])}, {"a": ["1/3", ["inf"]]}),
    ],
)
def test_to_serializable(value, expected):
    assert to_serializable(value) == expected


def test_to_serializable_rejects_unknown_types():
    with pytest.raises(TypeError):
        to_serializable(object())


def test_format_float():
    assert format_float(0.1) == 0.1
    assert format_float(math.inf) == "inf"
    assert format_float(-math.inf) == "-inf"
    assert format_float(math.nan) == "nan"


def test_build_output_path(tmp_path):
    assert build_output_path(str(tmp_path), "table", "csv") == os.path.join(tmp_path, "hypspec_table.csv")
    assert build_output_path(str(tmp_path), "profiles", "netcdf") == os.path.join(tmp_path, "hypspec_profiles.nc")

    target = tmp_path / "a" / "b" / "report.json"
    assert build_output_path(str(target), "report", "json") == str(target)
    assert (tmp_path / "a" / "b").is_dir()


def _reciprocal(cell, scale=1):
    return scale / cell


def test_process_cells_collects_failures():
    results, failed = process_cells([1, 0, 4], _reciprocal, func_kwargs={"scale": 2})
    assert results == [2.0, None, 0.5]
    assert len(failed) == 1
    cell, message = failed[0]
    assert cell == 0
    assert message.startswith("ZeroDivisionError")


def test_process_cells_parallel_keeps_order():
    cells = [1, 2, 4, 8, 0]
    results, failed = process_cells(cells, _reciprocal, max_workers=2, show_progress=False)
    assert results == [1.0, 0.5, 0.25, 0.125, None]
    assert [cell for cell, _ in failed] == [0]


@handle_file_errors("table", mode="read")
def _read_first_line(path):
    with open(path, encoding="utf-8") as handle:
        return handle.readline()


@handle_file_errors("report")
def _write_text(text, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def test_handle_file_errors(tmp_path):
    with pytest.raises(FileNotFoundError, match="Table file not found: .*missing.txt"):
        _read_first_line(str(tmp_path / "missing.txt"))
    with pytest.raises(OSError, match="Cannot read table"):
        _read_first_line(str(tmp_path))
    with pytest.raises(OSError, match="Cannot write report"):
        _write_text("x", path=str(tmp_path))
    with pytest.raises(ValueError):
        handle_file_errors("report", mode="append")

    path = tmp_path / "ok.txt"
    path.write_text("first\nsecond\n")
    assert _read_first_line(path=str(path)) == "first\n"
