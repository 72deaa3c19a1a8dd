"""Logarithmic second solution of the hypergeometric equation at ``c = 1 + λ``, λ in N.

The ansatz ``G(x) = x^{-λ} Σ a_m x^m + log x · Σ b_ν x^ν`` with ``a_0 = 1`` is
substituted into ``x(1-x)w'' + [c - (a+b+1)x]w' - ab w = 0``. Writing
``b_ν = κ f_ν`` with ``f_ν`` the Gauss coefficients of F(a,b;c;x), the
equation reduces to

    m(m-λ) a_m = (m-1-λ+a)(m-1-λ+b) a_{m-1} + R_{m-λ}
    R_k = κ(2k-2+a+b) f_{k-1} - κ(2k+λ) f_k          (R_k = 0 for k < 0)

At ``m = λ`` the left side vanishes, which fixes
``κ = (a-1)(b-1) a_{λ-1} / λ``; the free coefficient ``a_λ`` is set to 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable

import numpy as np
from numpy.polynomial import polynomial as P

from .exact import is_integer_value, is_rational
from .hypergeometric import HypergeometricParams
from ...utils.constants import (
    DEFAULT_FROBENIUS_ORDER,
    FROBENIUS_ORDER_CAP,
    FROBENIUS_TAIL_TARGET,
)
from ...utils.errors import ConvergenceError, DomainError


@lru_cache(maxsize=128)
def _coefficients(a: Any, b: Any, lam: int, order: int) -> tuple[tuple, tuple]:
    one = Fraction(1) if is_rational(a) and is_rational(b) else 1.0

    f = [one]
    for k in range(1, order + 1):
        f.append(f[-1] * (a + k - 1) * (b + k - 1) / (k * (lam + k)))

    a_coeffs = [one]
    for m in range(1, lam):
        a_coeffs.append(a_coeffs[-1] * (m - 1 - lam + a) * (m - 1 - lam + b) / (m * (m - lam)))
    kappa = a_coeffs[lam - 1] * (a - 1) * (b - 1) / lam
    a_coeffs.append(0 * one)
    for m in range(lam + 1, order + 1):
        k = m - lam
        source = kappa * (2 * k - 2 + a + b) * f[k - 1] - kappa * (2 * k + lam) * f[k]
        a_coeffs.append(
            (a_coeffs[-1] * (m - 1 - lam + a) * (m - 1 - lam + b) + source) / (m * (m - lam))
        )

    b_coeffs = [kappa * fk for fk in f]
    return tuple(a_coeffs), tuple(b_coeffs)


def _required_order(x: float, lam: int) -> int:
    """Smallest N >= default with ``x^N N^{λ+1}`` below the tail target."""
    order = DEFAULT_FROBENIUS_ORDER
    log_x = math.log(x)
    log_target = math.log(FROBENIUS_TAIL_TARGET)
    while order * log_x + (lam + 1) * math.log(order) >= log_target:
        order = int(order * 1.25) + 1
        if order > FROBENIUS_ORDER_CAP:
            raise ConvergenceError(
                f"Frobenius series at x = {x} needs more than {FROBENIUS_ORDER_CAP} terms"
            )
    return order


@dataclass(frozen=True)
class FrobeniusSolution:
    """Truncated Frobenius solution ``x^{-λ} Σ a_m x^m + log x Σ b_ν x^ν``.

    ``b_coeffs[0]`` is the scale of the logarithmic part fixed by ``a_0 = 1``;
    it vanishes exactly when ``b`` lies in ``{1, ..., λ}``, in which case the
    Laurent part alone is the second solution.
    """

    params: HypergeometricParams
    lambda_int: int
    a_coeffs: tuple
    b_coeffs: tuple
    truncation_order: int

    @property
    def logarithmic(self) -> bool:
        return self.b_coeffs[0] != 0

    @cached_property
    def _float_coeffs(self) -> tuple[np.ndarray, np.ndarray]:
        dtype = complex if any(isinstance(v, complex) for v in self.a_coeffs) else float
        return (
            np.array([dtype(v) for v in self.a_coeffs]),
            np.array([dtype(v) for v in self.b_coeffs]),
        )

    def _extended(self, order: int) -> FrobeniusSolution:
        if order <= self.truncation_order:
            return self
        return frobenius_second_solution(self.params, order, warn=False)

    def derivatives(self, x: float) -> tuple[Any, Any, Any]:
        """``(G, G', G'')`` at ``0 < x < 1``."""
        if not 0 < x < 1:
            raise DomainError(f"Frobenius evaluator needs 0 < x < 1, got {x}")
        solution = self._extended(_required_order(x, self.lambda_int))
        a_arr, b_arr = solution._float_coeffs
        lam = self.lambda_int

        # u = x^{-λ} Σ a_m x^m, v = Σ b_ν x^ν
        powers = np.arange(len(a_arr)) - lam
        u = P.polyval(x, a_arr) * x**-lam
        du = P.polyval(x, a_arr * powers) * x ** (-lam - 1)
        d2u = P.polyval(x, a_arr * powers * (powers - 1)) * x ** (-lam - 2)
        v = P.polyval(x, b_arr)
        dv = P.polyval(x, P.polyder(b_arr))
        d2v = P.polyval(x, P.polyder(b_arr, 2))

        log_x = math.log(x)
        g = u + log_x * v
        dg = du + v / x + log_x * dv
        d2g = d2u - v / x**2 + 2 * dv / x + log_x * d2v
        return g, dg, d2g

    def __call__(self, x: float) -> Any:
        return self.derivatives(x)[0]


def frobenius_second_solution(
    p: HypergeometricParams,
    order: int = DEFAULT_FROBENIUS_ORDER,
    warn: bool = True,
) -> FrobeniusSolution:
    """Build the Frobenius second solution for ``c = 1 + λ`` with λ a positive integer.

    Parameters
    ----------
    p : HypergeometricParams
        ``(a, b, 1 + λ)``; typically ``a = λ+ρ+j``, ``b = λ-ρ+1-j``.
    order : int, default 60
        Initial truncation order. Evaluation extends it per point.
    warn : bool, default True
        Warn when the logarithmic part vanishes.

    Returns
    -------
    FrobeniusSolution
        Exact (Fraction) coefficients when ``a`` and ``b`` are rational.

    Raises
    ------
    DomainError
        If ``order < 1`` or ``c - 1`` is not a positive integer.
    """
    if order < 1:
        raise DomainError(f"Frobenius truncation order must be >= 1, got {order}")
    lam = p.c - 1
    if not is_integer_value(lam) or lam < 1:
        raise DomainError(f"Frobenius second solution needs c - 1 in N, got c = {p.c}")
    lam = int(lam)
    order = max(order, lam + 1)

    a_coeffs, b_coeffs = _coefficients(p.a, p.b, lam, order)
    solution = FrobeniusSolution(p, lam, a_coeffs, b_coeffs, order)
    if warn and not solution.logarithmic:
        warnings.warn(
            f"b = {p.b} lies in 1..{lam}: the logarithmic part vanishes and "
            f"the x^-{lam} series alone is the second solution",
            stacklevel=2,
        )
    return solution


def hypergeometric_ode_residual(
    p: HypergeometricParams,
    w: Callable,
    x: float,
    relative: bool = False,
) -> Any:
    """Residual of ``x(1-x)w'' + [c - (a+b+1)x]w' - ab w`` at ``x``.

    ``w`` must expose ``derivatives(x) -> (w, w', w'')``.
    """
    value, first, second = w.derivatives(x)
    terms = (
        x * (1 - x) * second,
        (p.c - (p.a + p.b + 1) * x) * first,
        -p.a * p.b * value,
    )
    residual = sum(complex(term) for term in terms)
    residual = residual.real if residual.imag == 0 else residual
    if not relative:
        return residual
    scale = sum(abs(complex(term)) for term in terms)
    return abs(residual) / scale if scale else abs(residual)
