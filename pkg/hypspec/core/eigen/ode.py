"""Residuals of the radial equation and Wronskians."""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import Any

from .geometry import SpectralParam
from .radial import RadialSolution, casimir_eigenvalue
from ...utils.constants import DEFAULT_FD_STEP
from ...utils.errors import DomainError


def finite_differences(f: Callable[[float], Any], t: float, h: float = DEFAULT_FD_STEP) -> tuple[Any, Any, Any]:
    """``(f, f', f'')`` by the 5-point central stencil of step h."""
    if not h > 0:
        raise DomainError(f"Finite-difference step must be positive, got {h}")
    fm2, fm1, f0, fp1, fp2 = (f(t + k * h) for k in (-2, -1, 0, 1, 2))
    first = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
    second = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h**2)
    return f0, first, second


def _derivatives(f: Any, t: float, h: float) -> tuple[Any, Any, Any]:
    if hasattr(f, "derivatives"):
        return f.derivatives(t)
    return finite_differences(f, t, h)


def _finish(terms: tuple[Any, ...], value: Any, relative: bool) -> Any:
    residual = sum(terms)
    if isinstance(residual, complex) and residual.imag == 0:
        residual = residual.real
    if not relative:
        return residual
    return abs(residual) / max(abs(value), 1.0)


def radial_ode_residual(
    s: SpectralParam,
    j: int,
    f: Any,
    t: float,
    h: float = DEFAULT_FD_STEP,
    relative: bool = False,
) -> Any:
    """Residual of ``f'' + 2ρ tanh t f' + j(j+n-2) sech²t f - (λ²-ρ²) f``.

    Parameters
    ----------
    s : SpectralParam
        The parameter λ.
    j : int
        K-type index.
    f : callable
        Evaluator in t. Its ``derivatives(t)`` method is used when present
        (every :class:`RadialSolution` has one); otherwise f is differentiated
        by the 5-point stencil of step h.
    t : float
        Evaluation point.
    h : float, default 1e-3
        Finite-difference step.
    relative : bool, default False
        Divide by ``max(|f(t)|, 1)``.
    """
    value, first, second = _derivatives(f, t, h)
    rho = float(s.rho)
    eigenvalue = casimir_eigenvalue(s)
    eigenvalue = complex(eigenvalue) if isinstance(eigenvalue, complex) else float(eigenvalue)
    terms = (
        second,
        2 * rho * math.tanh(t) * first,
        s.geometry.ktype_eigenvalue(j) / math.cosh(t) ** 2 * value,
        -eigenvalue * value,
    )
    return _finish(terms, value, relative)


def transformed_ode_residual(
    s: SpectralParam,
    j: int,
    t: float,
    relative: bool = False,
) -> Any:
    """Residual of ``Φ'' - 2λ tanh t Φ' - ab sech²t Φ`` for ``Φ = (cosh t)^{λ+ρ} φ_{λ,j}``."""
    solution = RadialSolution(s, j)
    value, first, second = solution.transformed_derivatives(t)
    params = solution.params
    lam = s.lam if isinstance(s.lam, complex) else float(s.lam)
    ab = params.a * params.b
    ab = ab if isinstance(ab, complex) else float(ab)
    z = math.tanh(t)
    terms = (second, -2 * lam * z * first, -ab * (1 - z**2) * value)
    return _finish(terms, value, relative)


def wronskian(f: Any, g: Any, t: float, h: float = DEFAULT_FD_STEP) -> Any:
    """``W(f, g)(t) = f g' - f' g``."""
    f0, f1, _ = _derivatives(f, t, h)
    g0, g1, _ = _derivatives(g, t, h)
    return f0 * g1 - f1 * g0
