"""Equal-index Jacobi polynomials P_l^{(α,α)} (Gegenbauer up to normalisation)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any

import sympy

from .exact import from_sympy, is_rational, to_sympy
from .gamma import pochhammer
from ...utils.errors import DomainError

Z = sympy.Symbol("z")


def _check_degree(l: int) -> None:
    if l < 0:
        raise DomainError(f"Jacobi degree must be non-negative, got {l}")


@lru_cache(maxsize=512)
def _coefficients_cached(l: int, alpha: Fraction) -> sympy.Poly:
    # P_l = sum_m (α+m+1)_{l-m}/l! * (-l)_m (l+2α+1)_m / m! * ((1-z)/2)^m
    w = (1 - Z) / 2
    expr = sympy.Integer(0)
    for m in range(l + 1):
        coeff = (
            pochhammer(alpha + m + 1, l - m)
            * pochhammer(-l, m)
            * pochhammer(l + 2 * alpha + 1, m)
            / (math.factorial(l) * math.factorial(m))
        )
        expr += to_sympy(Fraction(coeff)) * w**m
    return sympy.Poly(sympy.expand(expr), Z, domain="QQ")


def jacobi_coefficients(l: int, alpha: Any) -> sympy.Poly:
    """Exact polynomial ``P_l^{(α,α)}(z)`` over Q in the symbol ``z``.

    Built from ``((α+1)_l / l!) F(l+2α+1, -l; α+1; (1-z)/2)`` with the
    ratio ``(α+1)_l / (α+1)_m`` expanded, so no α gives a pole.
    """
    _check_degree(l)
    if not is_rational(alpha):
        raise DomainError(f"jacobi_coefficients needs a rational alpha, got {alpha!r}")
    return _coefficients_cached(l, Fraction(alpha))


def _jacobi_float(l: int, alpha: Any, z: Any) -> Any:
    alpha = complex(alpha) if isinstance(alpha, complex) else float(alpha)
    if l == 0:
        return 1.0
    # (n)(n+2α) P_n = (n+α)(2n+2α-1) z P_{n-1} - (n+α)(n+α-1) P_{n-2}
    if any(n + 2 * alpha == 0 for n in range(1, l + 1)):
        w = (1 - z) / 2
        return sum(
            pochhammer(alpha + m + 1, l - m) * pochhammer(-l, m)
            * pochhammer(l + 2 * alpha + 1, m) / (math.factorial(l) * math.factorial(m))
            * w**m
            for m in range(l + 1)
        )
    previous, current = 1.0, (alpha + 1) * z
    for n in range(2, l + 1):
        previous, current = current, (
            (n + alpha) * (2 * n + 2 * alpha - 1) * z * current
            - (n + alpha) * (n + alpha - 1) * previous
        ) / (n * (n + 2 * alpha))
    return current


def jacobi_poly(l: int, alpha: Any, z: Any) -> Any:
    """Evaluate ``P_l^{(α,α)}(z)``.

    Parameters
    ----------
    l : int
        Degree, ``l >= 0``.
    alpha : Fraction, float or complex
        Index. Exact mode has no sign constraint.
    z : Fraction, float or numpy array
        Argument.

    Returns
    -------
    Fraction, float, complex or ndarray
        Exact when ``alpha`` and ``z`` are both rational.
    """
    _check_degree(l)
    if is_rational(alpha) and is_rational(z):
        poly = jacobi_coefficients(l, alpha)
        return from_sympy(poly.eval(to_sympy(z)))
    return _jacobi_float(l, alpha, z)


def jacobi_derivative(l: int, alpha: Any, z: Any, order: int = 1) -> Any:
    """k-th derivative via ``d/dz P_l^{(α,α)} = (l+2α+1)/2 · P_{l-1}^{(α+1,α+1)}``."""
    _check_degree(l)
    factor = 1
    for k in range(order):
        if l - k == 0:
            return 0 * z
        factor = factor * (l - k + 2 * (alpha + k) + 1) / 2
    if is_rational(factor) and not is_rational(z):
        factor = float(factor)
    return factor * jacobi_poly(l - order, alpha + order, z)
