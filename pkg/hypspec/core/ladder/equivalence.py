"""Equivalence of the even and odd ladders in the range ``0 < λ < ρ``.

Two ladder modules with one-dimensional K-types, the same K-types and the
same Casimir eigenvalue are equivalent when their invariant products
``p_j = a_j b_{j+1}`` agree. The U_λ products are exact; those of the
complementary family come from least-squares fits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .coefficients import ladder_coeffs_at
from .families import (
    DerivativeFit,
    LadderFamily,
    complementary_family,
    fit_derivative_expansion,
    u_lambda_family,
)
from ..eigen.geometry import Geometry, SpectralParam
from ..eigen.radial import casimir_eigenvalue
from ..spectrum.ktypes import Parity
from ..spectrum.norms import NormDiagnostic, lp_quadrature
from ..spectrum.theorems import in_theorem2_regime
from ...utils.constants import DEFAULT_FIT_GRID, DEFAULT_TRUNCATION
from ...utils.errors import DomainError


def default_fit_grid() -> np.ndarray:
    start, stop, size = DEFAULT_FIT_GRID
    return np.linspace(start, stop, size)


def _spectral(g: Geometry, lam: Any) -> SpectralParam:
    return lam if isinstance(lam, SpectralParam) else SpectralParam(g, lam)


def fitted_products(fam: LadderFamily, j_max: int, grid: Any = None) -> tuple[list[float], list[DerivativeFit]]:
    """``a_j b_{j+1}`` for ``j = bottom .. j_max - 1`` from fits up to j_max."""
    grid = default_fit_grid() if grid is None else grid
    fits = [fit_derivative_expansion(fam, j, grid) for j in range(fam.bottom, j_max + 1)]
    products = [fits[i].a * fits[i + 1].b for i in range(len(fits) - 1)]
    return products, fits


@dataclass(frozen=True)
class EquivalenceReport:
    """Exact U_λ products against fitted complementary products, ``j < j_max``."""

    products_exact: list[Fraction]
    products_fitted: list[float]
    max_rel_deviation: float
    casimir_match: bool
    fit_residuals: list[float] = field(default_factory=list)


def equivalence_invariants(
    g: Geometry,
    lam: Any,
    j_max: int,
    grid: Any = None,
) -> EquivalenceReport:
    """Compare the invariant products of the two ladders up to ``j_max``.

    Raises
    ------
    DomainError
        Outside ``0 < λ < ρ``, ``λ ∈ ρ - N``.
    IllConditionedError
        If a fit is ill-conditioned.
    """
    s = _spectral(g, lam)
    if not in_theorem2_regime(s):
        raise DomainError(f"equivalence_invariants needs 0 < λ < ρ with λ in ρ - N, got {s}")
    if j_max < 1:
        raise DomainError(f"j_max must be >= 1, got {j_max}")

    exact = [
        ladder_coeffs_at(s, j).A * ladder_coeffs_at(s, j + 1).B
        for j in range(j_max)
    ]
    complementary = complementary_family(s, j_max)
    fitted, fits = fitted_products(complementary, j_max, grid)

    deviations = [
        abs(value - float(reference)) / abs(float(reference)) if reference else abs(value)
        for value, reference in zip(fitted, exact)
    ]
    # both ladders must act on the same eigenvalue equation
    casimir_match = casimir_eigenvalue(complementary.spectral) == casimir_eigenvalue(s)
    return EquivalenceReport(
        products_exact=exact,
        products_fitted=fitted,
        max_rel_deviation=max(deviations, default=0.0),
        casimir_match=casimir_match,
        fit_residuals=[fit.fit_residual for fit in fits],
    )


def fit_residual_refinement(
    s: SpectralParam,
    j: int,
    rtols: tuple[float, ...] = (1e-6, 1e-9, 1e-12),
    grid: Any = None,
) -> list[float]:
    """Complementary-family fit residual at K-type j for each stepper tolerance."""
    grid = default_fit_grid() if grid is None else grid
    residuals = []
    for rtol in rtols:
        fam = complementary_family(s, j, t_max=float(np.max(grid)) + 1, rtol=rtol, atol=rtol * 1e-2)
        residuals.append(fit_derivative_expansion(fam, j, grid).fit_residual)
    return residuals


@dataclass(frozen=True)
class CrossCheck:
    """Quadrature corroboration of the L² / non-tempered split in ``0 < λ < ρ``."""

    l2_parity: Parity
    p: float
    threshold: Fraction
    u_lambda: list[tuple[int, NormDiagnostic]]
    complementary: list[tuple[int, NormDiagnostic]]

    @property
    def passed(self) -> bool:
        return all(d.converging for _, d in self.u_lambda) and not any(
            d.converging for _, d in self.complementary
        )


def theorem2_cross_check(
    g: Geometry,
    lam: Any,
    eps: float | None = None,
    j_count: int = 3,
    truncation: float = DEFAULT_TRUNCATION,
) -> CrossCheck | None:
    """L² quadrature of U_λ converges while the complementary family's L^{2+ε} diverges.

    ``eps`` defaults to half of ``p* - 2`` with ``p* = 2ρ/(ρ - λ)``; it must
    stay below ``p* - 2``. Returns None outside ``0 < λ < ρ``, ``λ ∈ ρ - N``.
    """
    s = _spectral(g, lam)
    if not in_theorem2_regime(s):
        return None
    rho, lam_value = s.rho, s.lam
    threshold = 2 * rho / (rho - lam_value)
    if eps is None:
        eps = float(threshold - 2) / 2
    if not 0 <= eps < threshold - 2:
        raise DomainError(f"eps must lie in [0, {threshold - 2}), got {eps}")
    p = 2 + eps

    decay, growth = float(-(lam_value + rho)), float(lam_value - rho)
    u_family = u_lambda_family(s, j_count)
    u_results = [
        (j, lp_quadrature(u_family.basis[j], rho, 2.0, 2 * decay + 2 * float(rho), truncation))
        for j in range(j_count)
    ]
    c_family = complementary_family(s, j_count, t_max=truncation)
    c_results = [
        (j, lp_quadrature(c_family.basis[j], rho, p, p * growth + 2 * float(rho), truncation))
        for j in range(j_count)
    ]
    return CrossCheck(u_family.parity, p, threshold, u_results, c_results)
