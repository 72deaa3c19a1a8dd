"""The hyperboloid dimension and the spectral parameter."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from ..specfun.exact import as_fraction, is_integer_value, is_rational
from ...utils.errors import DomainError


@dataclass(frozen=True)
class Geometry:
    """The hyperboloid ``x_1^2 + ... + x_n^2 - x_{n+1}^2 = 1``, ``n >= 3``."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if self.n < 3:
            raise DomainError(f"n must be >= 3, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def rho(self) -> Fraction:
        """``ρ = (n - 1) / 2``."""
        return Fraction(self.n - 1, 2)

    @property
    def zonal_index(self) -> Fraction:
        """Jacobi index ``(n - 3) / 2`` of the zonal spherical harmonics."""
        return Fraction(self.n - 3, 2)

    @property
    def even_dimension(self) -> bool:
        return self.n % 2 == 0

    def ktype_eigenvalue(self, j: int) -> int:
        """``j(j + n - 2)``, minus the eigenvalue of the sphere Laplacian on degree j."""
        return j * (j + self.n - 2)


def _normalise_lambda(value: Any) -> Fraction | float | complex:
    if isinstance(value, bool):
        raise DomainError(f"Not a spectral parameter: {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            return as_fraction(text)
        except ValueError:
            return _normalise_lambda(complex(text.replace("i", "j")))
    if isinstance(value, np.integer):
        value = int(value)
    if is_rational(value):
        return Fraction(value)
    value = complex(value)
    if value.imag != 0:
        return value
    real = value.real
    if float(2 * real).is_integer():
        return Fraction(real)
    return real


@dataclass(frozen=True)
class SpectralParam:
    """The eigenvalue parameter λ of ``Δf = (λ² - ρ²)f``.

    Rationals are kept exact (``"5/2"``, ``Fraction(5, 2)``, ints, and floats
    that are integers or half-integers); anything else is a float or complex.
    """

    geometry: Geometry
    lam: Any

    def __post_init__(self):
        object.__setattr__(self, "lam", _normalise_lambda(self.lam))

    @classmethod
    def from_offset(cls, geometry: Geometry, k: Any) -> SpectralParam:
        """``λ = ρ + k``."""
        return cls(geometry, geometry.rho + as_fraction(k))

    @property
    def rho(self) -> Fraction:
        return self.geometry.rho

    @property
    def is_exact(self) -> bool:
        return is_rational(self.lam)

    @property
    def offset(self) -> Fraction | None:
        """``λ - ρ`` when λ is exact."""
        return self.lam - self.rho if self.is_exact else None

    @property
    def integer_offset(self) -> int | None:
        """``k`` with ``λ = ρ + k`` when ``λ - ρ`` is an integer."""
        offset = self.offset
        if offset is None or not is_integer_value(offset):
            return None
        return int(offset)

    @property
    def real(self) -> float:
        return float(np.real(complex(self.lam)))

    @property
    def is_positive_integer(self) -> bool:
        return is_integer_value(self.lam) and self.lam > 0

    def negated(self) -> SpectralParam:
        return SpectralParam(self.geometry, -self.lam)

    def require_positive(self, what: str) -> None:
        if not self.real > 0:
            raise DomainError(f"{what} needs Re λ > 0, got λ = {self.lam}")

    def __str__(self) -> str:
        return f"n={self.geometry.n}, lambda={self.lam}"


class Branch(enum.Enum):
    """Solution branches of the radial equation."""

    PHI_PLUS = "phi_plus"
    PHI_REFLECTED = "phi_reflected"
    PHI_NEG_LAMBDA = "phi_neg_lambda"
    SECOND_KIND_LOG = "second_kind_log"
