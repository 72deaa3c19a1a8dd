"""The Gauss hypergeometric function 2F1(a, b; c; x).

Terminating series are summed directly (exactly for rational input),
non-terminating ones by the Gauss series on ``0 < x <= 1/2``, by the Pfaff
transformation for ``x < 0`` and by mpmath's analytic continuation on
``1/2 < x < 1``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, NamedTuple

import mpmath
import numpy as np
import scipy.special
from mpmath.libmp import NoConvergence

from .exact import ExactScalar, is_nonpositive_integer, is_rational
from .gamma import GammaFlag, gamma_exact
from ...utils.constants import (
    CONTINUATION_CACHE_SIZE,
    CONTINUATION_DPS,
    DEFAULT_SERIES_TOL,
    SERIES_ITERATION_CAP,
)
from ...utils.errors import ConvergenceError, DomainError

_EPS = sys.float_info.epsilon


def _numeric(value: Any) -> float | complex:
    """Float for real input, complex otherwise."""
    if isinstance(value, complex):
        return value if value.imag != 0 else value.real
    return float(value)


def _to_mpmath(value: Any):
    if is_rational(value):
        q = Fraction(value)
        return mpmath.mpf(q.numerator) / q.denominator
    if isinstance(value, complex):
        return mpmath.mpc(value.real, value.imag)
    return mpmath.mpf(float(value))


def _terminating_degree(a: Any, b: Any) -> int | None:
    degrees = [int(-np.real(v)) for v in (a, b) if is_nonpositive_integer(v)]
    return min(degrees) if degrees else None


@dataclass(frozen=True)
class HypergeometricParams:
    """Parameters ``(a, b, c)`` of 2F1.

    ``c`` may lie in -N_0 only when the series stops before reaching the
    pole, i.e. when the terminating degree is smaller than ``-c``.
    """

    a: Any
    b: Any
    c: Any

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            degree = _terminating_degree(self.a, self.b)
            if degree is None or degree >= -np.real(self.c):
                raise DomainError(
                    f"c = {self.c} is a non-positive integer and the series "
                    f"does not terminate before the pole"
                )

    @property
    def is_exact(self) -> bool:
        return all(is_rational(v) for v in (self.a, self.b, self.c))

    @property
    def excess(self) -> Any:
        """``a + b - c``, the exponent governing the behaviour at x = 1."""
        return self.a + self.b - self.c

    def shifted(self, k: int = 1) -> HypergeometricParams:
        """Parameters of the k-th derivative, ``(a+k, b+k; c+k)``."""
        return HypergeometricParams(self.a + k, self.b + k, self.c + k)

    def derivative_factor(self, k: int = 1) -> Any:
        """``(a)_k (b)_k / (c)_k``, so that ``F^(k) = factor * F(shifted(k))``."""
        factor = Fraction(1) if self.is_exact else 1.0
        for i in range(k):
            factor = factor * (self.a + i) * (self.b + i) / (self.c + i)
        return factor


class SeriesValue(NamedTuple):
    """A 2F1 value with an estimate of its absolute error."""

    value: Any
    error: float
    terms: int


def is_terminating(p: HypergeometricParams) -> int | None:
    """Polynomial degree ``min{-a, -b}`` when a or b is in -N_0, else None."""
    return _terminating_degree(p.a, p.b)


def _terminating_sum(p: HypergeometricParams, x: Any, degree: int) -> SeriesValue:
    exact = p.is_exact and is_rational(x)
    if exact:
        a, b, c, x = (Fraction(v) for v in (p.a, p.b, p.c, x))
    else:
        a, b, c = (_numeric(v) for v in (p.a, p.b, p.c))
        x = float(x)

    term = Fraction(1) if exact else 1.0
    total = term
    abs_sum = 1.0
    for m in range(1, degree + 1):
        term = term * (a + m - 1) * (b + m - 1) / (m * (c + m - 1)) * x
        total += term
        abs_sum += abs(term)

    error = 0.0 if exact else 4.0 * _EPS * (degree + 2) * abs_sum
    return SeriesValue(total, error, degree + 1)


def _gauss_series(p: HypergeometricParams, x: float, tol: float) -> SeriesValue:
    a, b, c = (_numeric(v) for v in (p.a, p.b, p.c))
    # ratio of consecutive terms is monotone beyond this index
    settle = 2 * (abs(a) + abs(b) + abs(c)) + 2

    term = 1.0
    total = 1.0
    abs_sum = 1.0
    for m in range(1, SERIES_ITERATION_CAP + 1):
        term = term * (a + m - 1) * (b + m - 1) / (m * (c + m - 1)) * x
        total += term
        abs_sum += abs(term)
        if m < settle:
            continue
        ratio = max(abs((a + m) * (b + m) / ((m + 1) * (c + m)) * x), abs(x))
        if ratio >= 1:
            continue
        tail = abs(term) * ratio / (1 - ratio)
        if tail <= tol * max(abs(total), sys.float_info.min):
            error = tail + 4.0 * _EPS * (m + 1) * abs_sum
            return SeriesValue(total, error, m + 1)

    raise ConvergenceError(
        f"Gauss series for 2F1{p.a, p.b, p.c} at x = {x} did not converge "
        f"within {SERIES_ITERATION_CAP} terms"
    )


@lru_cache(maxsize=CONTINUATION_CACHE_SIZE)
def _continued(p: HypergeometricParams, y: float) -> SeriesValue:
    """mpmath 2F1 at ``x = 1 - y`` with ``y`` carried at full precision.

    Results are memoized per ``(p, y)``.
    """
    with mpmath.workdps(CONTINUATION_DPS):
        x = mpmath.mpf(1) - _to_mpmath(y)
        try:
            value = mpmath.hyp2f1(_to_mpmath(p.a), _to_mpmath(p.b), _to_mpmath(p.c), x)
        except (ArithmeticError, ValueError, NoConvergence) as exc:
            raise ConvergenceError(
                f"Continuation of 2F1{p.a, p.b, p.c} to x = 1 - {y} failed: {exc}"
            ) from exc
        value = complex(value)
    value = _numeric(value)
    return SeriesValue(value, abs(value) * 2 * _EPS, 0)


def hyp2f1(
    p: HypergeometricParams,
    x: Any,
    tol: float = DEFAULT_SERIES_TOL,
) -> SeriesValue:
    """Evaluate 2F1(a, b; c; x).

    Parameters
    ----------
    p : HypergeometricParams
        Series parameters.
    x : float or Fraction
        Argument. Any real value when the series terminates; ``x < 1``
        otherwise.
    tol : float, default 1e-12
        Relative tolerance on the truncated tail of the Gauss series.

    Returns
    -------
    SeriesValue
        Value (a Fraction when the series terminates and all inputs are
        rational), absolute error estimate and number of terms used.

    Raises
    ------
    DomainError
        Non-terminating series at ``x >= 1``.
    ConvergenceError
        Iteration cap reached, or the continuation failed.
    """
    degree = is_terminating(p)
    if degree is not None:
        return _terminating_sum(p, x, degree)

    x = float(x)
    if x == 0:
        return SeriesValue(1.0, 0.0, 1)
    if 0 < x <= 0.5:
        return _gauss_series(p, x, tol)
    if 0.5 < x < 1:
        return _continued(p, 1.0 - x)
    if x < 0:
        # Pfaff: F(a,b;c;x) = (1-x)^(-a) F(a, c-b; c; x/(x-1))
        factor = (1.0 - x) ** (-_numeric(p.a))
        inner = HypergeometricParams(p.a, p.c - p.b, p.c)
        z = x / (x - 1.0)
        if z <= 0.5:
            value = hyp2f1(inner, z, tol)
        else:
            value = _continued(inner, 1.0 / (1.0 - x))
        return SeriesValue(factor * value.value, abs(factor) * value.error, value.terms)
    raise DomainError(f"Non-terminating 2F1 is not defined by its series at x = {x}")


def hyp2f1_complement(
    p: HypergeometricParams,
    y: float,
    tol: float = DEFAULT_SERIES_TOL,
) -> SeriesValue:
    """Evaluate 2F1(a, b; c; 1 - y) for ``0 < y``, keeping the precision of ``y``.

    Used where the argument sits within rounding distance of 1, e.g.
    ``x = (1 + e^{2t})^{-1}`` for large negative ``t``.
    """
    if is_terminating(p) is not None or y >= 0.5:
        return hyp2f1(p, 1.0 - y, tol)
    if y <= 0:
        raise DomainError(f"hyp2f1_complement needs y > 0, got {y}")
    return _continued(p, y)


def hyp2f1_derivatives(
    p: HypergeometricParams,
    x: Any,
    tol: float = DEFAULT_SERIES_TOL,
    y: float | None = None,
) -> tuple[Any, Any, Any]:
    """``(F, F', F'')`` at ``x`` from ``F^(k) = (a)_k (b)_k / (c)_k F(a+k, b+k; c+k)``.

    When ``y`` is given the argument is taken as ``1 - y`` and evaluated
    through :func:`hyp2f1_complement`.
    """
    values = []
    for k in range(3):
        factor = p.derivative_factor(k)
        if factor == 0:
            values.append(0)
            continue
        shifted = p.shifted(k) if k else p
        if y is None:
            value = hyp2f1(shifted, x, tol).value
        else:
            value = hyp2f1_complement(shifted, y, tol).value
        values.append(factor * value)
    return values[0], values[1], values[2]


def gauss_limit_constant(p: HypergeometricParams) -> ExactScalar | float | complex:
    """The limit ``A = lim_{x->1-} (1-x)^{a+b-c} F(a,b;c;x) = Γ(c)Γ(a+b-c) / (Γ(a)Γ(b))``.

    Exact (an ExactScalar) when all four Γ-arguments are integers or
    half-odd-integers; 0 exactly when Γ(a) or Γ(b) has a pole.

    Raises
    ------
    DomainError
        If ``Re(a + b - c) <= 0``.
    """
    s = p.excess
    if not np.real(complex(s)) > 0:
        raise DomainError(f"gauss_limit_constant needs Re(a+b-c) > 0, got {s}")

    args = (p.c, s, p.a, p.b)
    exact = all(is_rational(v) and (2 * Fraction(v)).denominator == 1 for v in args)

    if is_nonpositive_integer(p.a) or is_nonpositive_integer(p.b):
        return ExactScalar(Fraction(0)) if p.is_exact else 0.0

    if exact:
        gamma_c, gamma_s, gamma_a, gamma_b = (gamma_exact(v) for v in args)
        if GammaFlag.POLE in (gamma_c, gamma_s):
            raise DomainError(f"Γ pole in the numerator of the limit constant for {p}")
        return gamma_c * gamma_s / (gamma_a * gamma_b)

    c, s, a, b = (complex(float(v)) if is_rational(v) else complex(v) for v in args)
    log_value = (
        scipy.special.loggamma(c) + scipy.special.loggamma(s)
        - scipy.special.loggamma(a) - scipy.special.loggamma(b)
    )
    value = complex(np.exp(log_value))
    if all(v.imag == 0 for v in (c, s, a, b)):
        return value.real
    return value
