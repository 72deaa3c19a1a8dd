"""Run configuration of the command-line front end."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from ..core.eigen.geometry import Geometry, SpectralParam
from ..utils.constants import (
    DEFAULT_FRACTIONAL_OFFSETS,
    DEFAULT_GRID,
    DEFAULT_J_MAX,
    DEFAULT_MAX_OFFSET,
    DEFAULT_N_RANGE,
    DEFAULT_TOLERANCES,
    MAX_N_RANGE,
)
from ..utils.errors import DomainError, UsageError

OUTPUT_FORMATS = ("json", "csv", "text")


def _parse_value(text: Any) -> Fraction | float | complex:
    try:
        return SpectralParam(Geometry(3), text).lam
    except (DomainError, ValueError, TypeError) as exc:
        raise UsageError(f"Cannot parse spectral value {text!r}") from exc


def _parse_offset(text: Any) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"Offsets λ - ρ must be exact rationals, got {text!r}") from exc


@dataclass(frozen=True)
class RunConfig:
    """A validated sweep over ``(n, λ)`` cells.

    ``lambdas`` are absolute values of λ and ``offsets`` values of ``k = λ - ρ``;
    when both are None the default sweep is used (integer offsets up to 6 with
    ``λ > 0`` plus a few fractional offsets). An empty tuple is an empty sweep.
    """

    n_range: tuple[int, int] = DEFAULT_N_RANGE
    lambdas: tuple[Any, ...] | None = None
    offsets: tuple[Any, ...] | None = None
    j_max: int = DEFAULT_J_MAX
    tolerances: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    grid: tuple[float, float, int] = DEFAULT_GRID
    output_format: str = "text"
    workers: int | None = None

    def __post_init__(self):
        lo, hi = self.n_range
        if not (MAX_N_RANGE[0] <= lo <= hi <= MAX_N_RANGE[1]):
            raise UsageError(
                f"n range must satisfy {MAX_N_RANGE[0]} <= lo <= hi <= {MAX_N_RANGE[1]}, "
                f"got [{lo}, {hi}]"
            )
        if self.j_max < 2:
            raise UsageError(f"j_max must be >= 2, got {self.j_max}")

        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise UsageError(f"Unknown tolerances: {sorted(unknown)}")
        tolerances = dict(DEFAULT_TOLERANCES)
        tolerances.update(self.tolerances)
        for name, value in tolerances.items():
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
                raise UsageError(f"Tolerance {name} must be a finite number >= 0, got {value!r}")
        object.__setattr__(self, "tolerances", tolerances)

        start, stop, size = self.grid
        if not (start < stop and int(size) >= 2):
            raise UsageError(f"Grid needs start < stop and at least 2 points, got {self.grid}")
        object.__setattr__(self, "grid", (float(start), float(stop), int(size)))

        if self.output_format not in OUTPUT_FORMATS:
            raise UsageError(
                f"Unsupported format: {self.output_format}. Valid options: {list(OUTPUT_FORMATS)}"
            )
        if self.workers is not None and self.workers < 1:
            raise UsageError(f"workers must be >= 1, got {self.workers}")

        if self.lambdas is not None:
            lambdas = tuple(_parse_value(value) for value in self.lambdas)
            for value in lambdas:
                if not np.real(complex(value)) > 0:
                    raise UsageError(f"λ must have positive real part, got {value}")
            object.__setattr__(self, "lambdas", lambdas)
        if self.offsets is not None:
            object.__setattr__(self, "offsets", tuple(_parse_offset(k) for k in self.offsets))

    @property
    def n_values(self) -> list[int]:
        return list(range(self.n_range[0], self.n_range[1] + 1))

    @property
    def t_grid(self) -> np.ndarray:
        start, stop, size = self.grid
        return np.linspace(start, stop, size)

    def tol(self, name: str) -> float:
        return self.tolerances[name]

    def _offsets_for(self, rho: Fraction) -> list[Fraction]:
        if self.offsets is not None:
            return list(self.offsets)
        lowest = -math.floor(rho)
        integers = [Fraction(k) for k in range(lowest, DEFAULT_MAX_OFFSET + 1)]
        fractional = [Fraction(k) for k in DEFAULT_FRACTIONAL_OFFSETS]
        return integers + fractional

    def cells(self, integer_offsets: bool = False) -> list[tuple[int, Any]]:
        """``(n, λ)`` pairs of the sweep, with ``λ > 0``, in a fixed order.

        With ``integer_offsets`` only cells with ``λ - ρ`` in Z are kept.
        """
        cells: list[tuple[int, Any]] = []
        for n in self.n_values:
            rho = Geometry(n).rho
            values: list[Any] = []
            if self.lambdas is not None:
                values.extend(self.lambdas)
            if self.offsets is not None or self.lambdas is None:
                values.extend(rho + k for k in self._offsets_for(rho) if rho + k > 0)
            for lam in values:
                if integer_offsets and SpectralParam(Geometry(n), lam).integer_offset is None:
                    continue
                cells.append((n, lam))
        return cells

    def to_dict(self) -> dict[str, Any]:
        """Echo of the configuration for reports."""
        return {
            "n_range": list(self.n_range),
            "lambdas": None if self.lambdas is None else list(self.lambdas),
            "offsets": None if self.offsets is None else list(self.offsets),
            "j_max": self.j_max,
            "tolerances": dict(sorted(self.tolerances.items())),
            "grid": list(self.grid),
        }
