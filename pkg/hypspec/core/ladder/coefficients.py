"""Raising and lowering coefficients of the U_λ ladder.

For ``j = λ-ρ+1+l`` the derivative along the geodesic satisfies

    φ'_{λ,j} = A_l φ_{λ,j+1} + B_l φ_{λ,j-1}

with ``A_l = -(λ+ρ+l)(2λ+l+1)/(2λ+2l+1)`` and ``B_l = l(λ-ρ+l+1)/(2λ+2l+1)``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np
import sympy

from ..eigen.geometry import Geometry, SpectralParam
from ..eigen.radial import RadialSolution, ladder_index
from ..specfun.exact import to_sympy
from ..specfun.gamma import pochhammer
from ..specfun.jacobi import Z, jacobi_coefficients
from ..spectrum.ktypes import discrete_ktype_set
from ...utils.errors import DomainError

LAMBDA, RHO, L = sympy.symbols("lambda rho l")


@dataclass(frozen=True)
class LadderCoeffs:
    l: int
    A: Fraction
    B: Fraction


def _require_ladder(s: SpectralParam) -> int:
    k = s.integer_offset
    if k is None or not s.lam > 0:
        raise DomainError(f"The U_λ ladder needs λ - ρ in Z and λ > 0, got {s}")
    return k


def ladder_coeffs(s: SpectralParam, l: int) -> LadderCoeffs:
    """Exact ``(A_l, B_l)``.

    Raises
    ------
    DomainError
        If ``λ - ρ`` is not an integer, ``λ <= 0``, ``l < 0`` or
        ``j = λ-ρ+1+l`` is negative.
    """
    k = _require_ladder(s)
    if l < 0 or k + 1 + l < 0:
        raise DomainError(f"No K-type j = λ-ρ+1+l >= 0 for l = {l} at {s}")
    lam, rho = s.lam, s.rho
    denominator = 2 * lam + 2 * l + 1
    a = -(lam + rho + l) * (2 * lam + l + 1) / denominator
    b = l * (lam - rho + l + 1) / denominator
    return LadderCoeffs(l, Fraction(a), Fraction(b))


def ladder_coeffs_at(s: SpectralParam, j: int) -> LadderCoeffs:
    """Coefficients at K-type j in D_λ."""
    l = ladder_index(s, j)
    if l is None:
        raise DomainError(f"j = {j} is not in D_λ for {s}")
    return ladder_coeffs(s, l)


def ladder_residual(s: SpectralParam, j: int, grid: Any) -> float:
    """``max_t |φ'_j - A_l φ_{j+1} - B_l φ_{j-1}|`` relative to the largest term magnitude.

    ``φ'_j`` comes from exact differentiation of the Jacobi closed form.
    """
    coeffs = ladder_coeffs_at(s, j)
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.size == 0:
        raise DomainError("ladder_residual needs a nonempty grid")

    centre = RadialSolution(s, j)
    upper = RadialSolution(s, j + 1)
    lower = RadialSolution(s, j - 1) if coeffs.B != 0 else None
    a, b = float(coeffs.A), float(coeffs.B)

    worst, scale = 0.0, 0.0
    for t in grid:
        derivative = centre.derivatives(t)[1]
        raised = a * upper(t)
        lowered = b * lower(t) if lower is not None else 0.0
        worst = max(worst, abs(derivative - raised - lowered))
        scale = max(scale, abs(derivative) + abs(raised) + abs(lowered))
    return worst / scale if scale else worst


def _normalisation(lam: Fraction, l: int) -> Fraction:
    return Fraction(math.factorial(l)) / pochhammer(lam + 1, l)


def certify_ladder_identity(s: SpectralParam, l: int) -> bool:
    """Check the ladder identity exactly as a polynomial identity in ``z = tanh t``.

    With ``φ_{λ,j} = N_l (cosh t)^{-λ-ρ} P_l^{(λ,λ)}(z)`` and ``N_l = l!/(λ+1)_l``
    the common factor ``(cosh t)^{-λ-ρ}`` cancels, leaving

        N_l [-(λ+ρ) z P_l + (1-z²) P_l'] = A_l N_{l+1} P_{l+1} + B_l N_{l-1} P_{l-1}.
    """
    coeffs = ladder_coeffs(s, l)
    lam = s.lam
    mu = to_sympy(lam + s.rho)
    p_l = jacobi_coefficients(l, lam).as_expr()

    lhs = to_sympy(_normalisation(lam, l)) * (-mu * Z * p_l + (1 - Z**2) * sympy.diff(p_l, Z))
    rhs = to_sympy(coeffs.A * _normalisation(lam, l + 1)) * jacobi_coefficients(l + 1, lam).as_expr()
    if l > 0:
        rhs += to_sympy(coeffs.B * _normalisation(lam, l - 1)) * jacobi_coefficients(l - 1, lam).as_expr()
    elif coeffs.B != 0:
        return False
    return sympy.expand(lhs - rhs) == 0


def derive_ladder_coefficients() -> tuple[sympy.Expr, sympy.Expr]:
    """Re-derive ``(A_l, B_l)`` symbolically in ``(λ, ρ, l)``.

    Starts from ``(cosh^{-μ} P_l(z))' = cosh^{-μ} [-μ z P_l + (1-z²)P_l']``,
    replaces ``(1-z²)P_l'`` by the derivative identity

        (1-z²)P_l' = (l+2λ+1) z P_l - (l+1)(l+2λ+1)/(l+λ+1) P_{l+1}

    and ``z P_l`` by the three-term recurrence

        (l+λ+1)(2l+2λ+1) z P_l = (l+λ)(l+λ+1) P_{l-1} + (l+1)(l+2λ+1) P_{l+1},

    then converts to the normalised basis ``N_l P_l``.
    """
    lam, rho, l = LAMBDA, RHO, L
    z, p_minus, p_centre, p_plus = sympy.symbols("z P_minus P_centre P_plus")
    mu = lam + rho

    derivative_identity = (l + 2 * lam + 1) * z * p_centre - (l + 1) * (l + 2 * lam + 1) / (
        l + lam + 1
    ) * p_plus
    z_times_centre = ((l + lam) * (l + lam + 1) * p_minus + (l + 1) * (l + 2 * lam + 1) * p_plus) / (
        (l + lam + 1) * (2 * l + 2 * lam + 1)
    )

    expr = sympy.expand(-mu * z * p_centre + derivative_identity)
    coefficient = expr.coeff(p_centre).coeff(z)
    expr = sympy.expand(expr - coefficient * z * p_centre + coefficient * z_times_centre)

    # N_l / N_{l+1} = (λ+l+1)/(l+1), N_l / N_{l-1} = l/(λ+l)
    a = sympy.factor(sympy.simplify(expr.coeff(p_plus) * (lam + l + 1) / (l + 1)))
    b = sympy.factor(sympy.simplify(expr.coeff(p_minus) * l / (lam + l)))
    return a, b


@dataclass(frozen=True)
class ConnectivityCertificate:
    """Ladder graph on ``D_λ ∩ [0, j_max]`` with its nonzero links."""

    nodes: list[int] = field(default_factory=list)
    raising: list[tuple[int, int]] = field(default_factory=list)
    lowering: list[tuple[int, int]] = field(default_factory=list)
    zero_lowering: list[int] = field(default_factory=list)


def _reachable(start: int, edges: list[tuple[int, int]]) -> set[int]:
    adjacency: dict[int, list[int]] = {}
    for source, target in edges:
        adjacency.setdefault(source, []).append(target)
    seen = {start}
    queue = deque([start])
    while queue:
        for target in adjacency.get(queue.popleft(), []):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return seen


def irreducibility_connectivity(
    g: Geometry, lam: Any, j_max: int
) -> tuple[bool, ConnectivityCertificate]:
    """Strong connectivity of the ladder graph, the irreducibility criterion for U_λ.

    Edges ``j → j+1`` where ``A ≠ 0`` and ``j → j-1`` where ``B ≠ 0``, by
    exact zero tests. An empty D_λ gives a vacuous True.
    """
    s = lam if isinstance(lam, SpectralParam) else SpectralParam(g, lam)
    d_lambda = discrete_ktype_set(s)
    nodes = d_lambda.up_to(j_max)
    if not nodes:
        return True, ConnectivityCertificate()

    raising, lowering, zero_lowering = [], [], []
    for j in nodes:
        coeffs = ladder_coeffs_at(s, j)
        if coeffs.A != 0 and j + 1 <= j_max:
            raising.append((j, j + 1))
        if coeffs.B != 0:
            lowering.append((j, j - 1))
        else:
            zero_lowering.append(j)

    edges = raising + lowering
    bottom = nodes[0]
    forward = _reachable(bottom, edges)
    backward = _reachable(bottom, [(target, source) for source, target in edges])
    connected = set(nodes) <= forward and set(nodes) <= backward
    return connected, ConnectivityCertificate(nodes, raising, lowering, zero_lowering)
