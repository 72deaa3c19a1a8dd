"""Ladder families: the U_λ basis and the complementary-parity basis.

In the range ``0 < λ < ρ`` the eigenspace of the parity opposite to U_λ has
no closed-form basis. Its radial parts are taken as the solutions of the
radial equation fixed at ``t = 0`` by ``(f, f') = (1, 0)`` (even in t) or
``(0, 1)`` (odd in t), integrated with a DOP853 stepper.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.integrate import solve_ivp

from ..eigen.geometry import SpectralParam
from ..eigen.radial import RadialSolution, casimir_eigenvalue
from ..spectrum.ktypes import Parity, discrete_ktype_set, parity_of_U
from ..spectrum.theorems import in_theorem2_regime
from ...utils.constants import (
    DEFAULT_TRUNCATION,
    FIT_CONDITION_CAP,
    MIN_FIT_POINTS,
    ODE_ATOL,
    ODE_RTOL,
)
from ...utils.errors import ConvergenceError, DomainError, IllConditionedError


class InitialValueSolution:
    """Solution of the radial equation for K-type j with definite parity in t.

    Integrated on ``[0, t_max]`` and extended to negative t by parity.
    """

    def __init__(
        self,
        s: SpectralParam,
        j: int,
        radial_parity: Parity,
        t_max: float = DEFAULT_TRUNCATION,
        rtol: float = ODE_RTOL,
        atol: float = ODE_ATOL,
    ):
        self.spectral = s
        self.j = j
        self.radial_parity = radial_parity
        self.t_max = t_max

        rho = float(s.rho)
        potential = s.geometry.ktype_eigenvalue(j)
        eigenvalue = float(casimir_eigenvalue(s))
        self._rho, self._potential, self._eigenvalue = rho, potential, eigenvalue

        initial = [1.0, 0.0] if radial_parity is Parity.EVEN else [0.0, 1.0]
        solution = solve_ivp(
            self._rhs, (0.0, t_max), initial, method="DOP853",
            rtol=rtol, atol=atol, dense_output=True,
        )
        if solution.status != 0:
            raise ConvergenceError(
                f"ODE integration for j = {j} at {s} failed: {solution.message}"
            )
        self._dense = solution.sol

    def _second(self, t: float, f: float, df: float) -> float:
        return (
            -2 * self._rho * math.tanh(t) * df
            - self._potential / math.cosh(t) ** 2 * f
            + self._eigenvalue * f
        )

    def _rhs(self, t: float, y: np.ndarray) -> list[float]:
        return [y[1], self._second(t, y[0], y[1])]

    def derivatives(self, t: float) -> tuple[float, float, float]:
        t = float(t)
        if abs(t) > self.t_max:
            raise DomainError(f"|t| = {abs(t)} exceeds the integration range {self.t_max}")
        sign = self.radial_parity.sign
        reflect = t < 0
        f, df = self._dense(abs(t))
        d2f = self._second(abs(t), f, df)
        if reflect:
            return sign * f, -sign * df, sign * d2f
        return f, df, d2f

    def __call__(self, t: float) -> float:
        return self.derivatives(t)[0]


class ScaledEvaluator:
    """``c · f`` for an evaluator f."""

    def __init__(self, base: Any, factor: float):
        self.base = base
        self.factor = factor

    def derivatives(self, t: float) -> tuple[Any, Any, Any]:
        return tuple(self.factor * value for value in self.base.derivatives(t))

    def __call__(self, t: float) -> Any:
        return self.factor * self.base(t)


@dataclass(frozen=True)
class LadderFamily:
    """Radial parts of one ladder of K-types, one evaluator per j.

    ``parity`` is the global parity of the functions ``h_j(y) f_j(t)``;
    ``kind`` is ``"u_lambda"`` or ``"complementary"``.
    """

    spectral: SpectralParam
    parity: Parity
    kind: str
    basis: Mapping[int, Any] = field(default_factory=dict)

    @property
    def j_range(self) -> tuple[int, int]:
        return min(self.basis), max(self.basis)

    @property
    def bottom(self) -> int:
        return self.j_range[0]

    def rescaled(self, factors: Mapping[int, float]) -> LadderFamily:
        """The same family with ``basis[j]`` multiplied by ``factors[j]``."""
        basis = {
            j: ScaledEvaluator(f, factors[j]) if j in factors else f
            for j, f in self.basis.items()
        }
        return LadderFamily(self.spectral, self.parity, self.kind, basis)


def u_lambda_family(s: SpectralParam, j_max: int) -> LadderFamily:
    """The closed-form basis φ_{λ,j}, ``j ∈ D_λ ∩ [0, j_max + 1]``."""
    d_lambda = discrete_ktype_set(s)
    if d_lambda.empty:
        raise DomainError(f"D_λ is empty for {s}")
    basis = {j: RadialSolution(s, j) for j in d_lambda.up_to(j_max + 1)}
    if not basis:
        raise DomainError(f"D_λ has no K-type up to {j_max + 1} for {s}")
    return LadderFamily(s, parity_of_U(s), "u_lambda", basis)


def complementary_family(
    s: SpectralParam,
    j_max: int,
    t_max: float = DEFAULT_TRUNCATION,
    rtol: float = ODE_RTOL,
    atol: float = ODE_ATOL,
) -> LadderFamily:
    """Initial-value basis of the parity opposite to U_λ, ``0 <= j <= j_max + 1``.

    Raises
    ------
    DomainError
        Outside ``0 < λ < ρ``, ``λ ∈ ρ - N``.
    """
    if not in_theorem2_regime(s):
        raise DomainError(f"The complementary family needs 0 < λ < ρ with λ in ρ - N, got {s}")
    parity = Parity.ODD if parity_of_U(s) is Parity.EVEN else Parity.EVEN
    basis = {
        j: InitialValueSolution(
            s, j, Parity.of_sign(parity.sign * (-1) ** j), t_max=t_max, rtol=rtol, atol=atol
        )
        for j in range(j_max + 2)
    }
    return LadderFamily(s, parity, "complementary", basis)


@dataclass(frozen=True)
class DerivativeFit:
    """Least-squares expansion ``f_j' ≈ a f_{j+1} + b f_{j-1}``; ``b`` is None at the bottom."""

    j: int
    a: float
    b: float | None
    fit_residual: float
    condition: float


def fit_derivative_expansion(fam: LadderFamily, j: int, grid: Any) -> DerivativeFit:
    """Fit ``f_j'`` against ``(f_{j+1}, f_{j-1})`` on a t-grid.

    Parameters
    ----------
    fam : LadderFamily
        Family providing j and its neighbours.
    j : int
        K-type; the lowering column is omitted when j is the family bottom.
    grid : array_like
        At least 20 t-values, away from the zeros forced by parity.

    Returns
    -------
    DerivativeFit
        Coefficients, relative L² misfit and condition number of the
        column-normalised design matrix.

    Raises
    ------
    IllConditionedError
        If the condition number exceeds 1e10.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size < MIN_FIT_POINTS:
        raise DomainError(f"Fit grid needs at least {MIN_FIT_POINTS} points, got {grid.size}")
    if j not in fam.basis or j + 1 not in fam.basis:
        raise DomainError(f"Family lacks K-types {j} and {j + 1}")

    bottom = j == fam.bottom
    target = np.array([fam.basis[j].derivatives(t)[1] for t in grid])
    columns = [np.array([fam.basis[j + 1](t) for t in grid])]
    if not bottom:
        columns.append(np.array([fam.basis[j - 1](t) for t in grid]))
    design = np.column_stack(columns)

    norms = np.linalg.norm(design, axis=0)
    if np.any(norms == 0):
        raise IllConditionedError(f"Zero column in the fit for j = {j}")
    normalised = design / norms
    condition = float(np.linalg.cond(normalised))
    if not condition <= FIT_CONDITION_CAP:
        raise IllConditionedError(
            f"Fit for j = {j} has condition number {condition:.3g} > {FIT_CONDITION_CAP:.0e}"
        )

    solution, *_ = np.linalg.lstsq(normalised, target, rcond=None)
    coefficients = solution / norms
    misfit = np.linalg.norm(design @ coefficients - target)
    scale = np.linalg.norm(target)
    return DerivativeFit(
        j=j,
        a=float(coefficients[0]),
        b=None if bottom else float(coefficients[1]),
        fit_residual=float(misfit / scale) if scale else float(misfit),
        condition=condition,
    )
