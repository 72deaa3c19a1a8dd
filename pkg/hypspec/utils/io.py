"""Utility functions for I/O."""

import math
import os
from fractions import Fraction
from typing import Any

import numpy as np

from ..core.specfun.exact import ExactScalar


_EXTENSIONS = {"json": ".json", "csv": ".csv", "text": ".txt", "netcdf": ".nc"}


def build_output_path(
    output: str,
    what: str,
    output_format: str,
    prefix: str = "hypspec",
) -> str:
    """Build an export file path.

    Parameters
    ----------
    output : str
        Either a file path or an existing directory.
    what : str
        Export kind (``"table"``, ``"report"``, ``"profiles"``), used in the
        generated file name when ``output`` is a directory.
    output_format : str
        One of ``json``, ``csv``, ``text``, ``netcdf``.
    prefix : str, default "hypspec"
        File name prefix for generated names.

    Returns
    -------
    str
        Full output path. Parent directories are created when missing.
    """
    if os.path.isdir(output):
        filename = f"{prefix}_{what}{_EXTENSIONS[output_format]}"
        return os.path.join(output, filename)

    output_dir = os.path.dirname(output)
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
    return output


def format_float(value: float) -> float | str:
    """Shortest round-trip float, with non-finite values spelled out."""
    value = float(value)
    if math.isfinite(value):
        return value
    return repr(value)


def to_serializable(value: Any) -> Any:
    """Convert a result value to a JSON-ready primitive.

    Exact rationals become ``"p/q"`` strings (never floats), exact Γ-products
    become their string form, numpy scalars become Python scalars, complex
    numbers become ``{"real": ..., "imag": ...}``. Containers are converted
    recursively with their order preserved.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, ExactScalar):
        return str(value)
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        if value.imag == 0:
            return format_float(value.real)
        return {"real": format_float(value.real), "imag": format_float(value.imag)}
    if isinstance(value, np.bool_):
        return bool(value)
    if hasattr(value, "value"):
        # enums
        return value.value
    if isinstance(value, dict):
        return {str(k): to_serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_serializable(v) for v in value]
    raise TypeError(f"Cannot serialize value of type {type(value).__name__}")
