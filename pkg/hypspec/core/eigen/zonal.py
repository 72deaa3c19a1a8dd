"""Zonal spherical harmonics on S^{n-1}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .geometry import Geometry
from .ode import finite_differences
from ..specfun.exact import is_rational
from ..specfun.jacobi import jacobi_derivative, jacobi_poly
from ...utils.constants import DEFAULT_FD_STEP
from ...utils.errors import DomainError


@dataclass(frozen=True)
class ZonalHarmonic:
    """``h_j(s) = P_j^{(ν,ν)}(s) / P_j^{(ν,ν)}(1)``, ``ν = (n-3)/2``, s the cosine of the polar angle."""

    geometry: Geometry
    j: int

    def __post_init__(self):
        if self.j < 0:
            raise DomainError(f"Harmonic degree must be >= 0, got {self.j}")

    @property
    def pole_value(self) -> Any:
        """``P_j^{(ν,ν)}(1) = (ν+1)_j / j!``."""
        return jacobi_poly(self.j, self.geometry.zonal_index, 1)

    def _check(self, s: Any) -> None:
        if np.any(np.abs(np.asarray(s, dtype=float)) > 1):
            raise DomainError(f"Zonal harmonics are defined for |s| <= 1, got {s}")

    def __call__(self, s: Any) -> Any:
        self._check(s)
        value = jacobi_poly(self.j, self.geometry.zonal_index, s)
        if is_rational(value):
            return value / self.pole_value
        return value / float(self.pole_value)

    def derivative(self, s: Any, order: int = 1) -> Any:
        self._check(s)
        return jacobi_derivative(self.j, self.geometry.zonal_index, s, order) / float(self.pole_value)

    def eigenvalue(self) -> int:
        """``-j(j+n-2)``."""
        return -self.geometry.ktype_eigenvalue(self.j)

    def angular_laplacian(self, theta: float, h: float = DEFAULT_FD_STEP) -> float:
        """``f'' + (n-2) cot θ f'`` for ``f(θ) = h_j(cos θ)``, by finite differences in θ."""
        if not 0 < theta < math.pi:
            raise DomainError(f"theta must lie in (0, pi), got {theta}")
        _, first, second = finite_differences(lambda x: self(math.cos(x)), theta, h)
        return second + (self.geometry.n - 2) / math.tan(theta) * first


def zonal_harmonic(g: Geometry, j: int, s: Any) -> Any:
    """Value of the degree-j zonal harmonic at ``s = cos θ``; exact for rational s.

    Raises
    ------
    DomainError
        If ``|s| > 1``.
    """
    return ZonalHarmonic(g, j)(s)
