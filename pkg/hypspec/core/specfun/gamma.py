"""Pochhammer symbols and the Gamma function, exact and floating-point."""

import enum
import math
from fractions import Fraction
from typing import Any

import numpy as np
import scipy.special

from .exact import ExactScalar, as_fraction, is_nonpositive_integer, is_rational
from ...utils.constants import GAMMA_OVERFLOW_THRESHOLD
from ...utils.errors import DomainError


class GammaFlag(enum.Enum):
    """Non-numeric Γ outcomes."""

    POLE = "pole"
    OVERFLOW = "overflow"


def pochhammer(a: Any, m: int) -> Any:
    """Rising factorial ``(a)_m = a (a+1) ... (a+m-1)``.

    Exact (int/Fraction) when ``a`` is rational; float or complex otherwise.
    The empty product ``(a)_0`` is 1.
    """
    if m < 0:
        raise DomainError(f"Pochhammer index must be non-negative, got {m}")
    return math.prod((a + k for k in range(m)), start=1)


def gamma_exact(z: Any) -> ExactScalar | GammaFlag:
    """Exact Γ(z) for ``2z`` an integer.

    Parameters
    ----------
    z : int, Fraction or "p/q" str
        Integer or half-odd-integer argument.

    Returns
    -------
    ExactScalar or GammaFlag
        ``(z-1)!`` for positive integers, ``q * sqrt(pi)`` for half-odd
        integers (via Γ(1/2) = sqrt(pi) and Γ(z+1) = z Γ(z), also for negative
        ones), ``GammaFlag.POLE`` on -N_0.
    """
    z = as_fraction(z)
    if (2 * z).denominator != 1:
        raise DomainError(f"gamma_exact needs 2z to be an integer, got z = {z}")

    if z.denominator == 1:
        if z <= 0:
            return GammaFlag.POLE
        return ExactScalar(Fraction(math.factorial(int(z) - 1)), 0)

    # Half-odd-integer: walk from 1/2
    q = Fraction(1)
    s = Fraction(1, 2)
    while s < z:
        q *= s
        s += 1
    while s > z:
        s -= 1
        q /= s
    return ExactScalar(q, 1)


def gamma_float(z: Any) -> float | complex | GammaFlag:
    """Floating-point Γ(z) via ``scipy.special.gamma``.

    Returns a float for real input and a complex for complex input;
    ``GammaFlag.POLE`` on -N_0 and ``GammaFlag.OVERFLOW`` for
    ``Re z > 170``.
    """
    if is_nonpositive_integer(z):
        return GammaFlag.POLE
    if is_rational(z):
        z = float(z)
    if np.real(z) > GAMMA_OVERFLOW_THRESHOLD:
        return GammaFlag.OVERFLOW
    if isinstance(z, complex) and z.imag != 0:
        return complex(scipy.special.gamma(z))
    return float(scipy.special.gamma(float(np.real(z))))
