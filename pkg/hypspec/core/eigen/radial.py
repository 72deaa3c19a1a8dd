"""Radial eigenfunctions φ_{λ,j}, their reflections and second solutions.

On the geodesic ``t ↦ exp(tT)x_0`` a K-finite eigenfunction of type j
reduces to ``f(t) h_j``, where f solves

    f'' + 2ρ tanh t f' + j(j+n-2) sech²t f = (λ² - ρ²) f.

With ``x = (1 + e^{2t})^{-1}`` and ``f = (cosh t)^{-λ-ρ} w(x)`` this becomes
the hypergeometric equation with ``a = λ+ρ+j``, ``b = λ-ρ+1-j``, ``c = 1+λ``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Any

import numpy as np
import scipy.special

from .geometry import Branch, SpectralParam
from ..specfun.exact import is_nonpositive_integer
from ..specfun.frobenius import FrobeniusSolution, frobenius_second_solution
from ..specfun.gamma import pochhammer
from ..specfun.hypergeometric import (
    HypergeometricParams,
    gauss_limit_constant,
    hyp2f1,
    hyp2f1_complement,
    hyp2f1_derivatives,
)
from ..specfun.jacobi import jacobi_derivative, jacobi_poly
from ...utils.constants import (
    DEFAULT_ASYMPTOTIC_PROBE,
    DEFAULT_SERIES_TOL,
    MIN_ASYMPTOTIC_PROBE,
)
from ...utils.errors import DomainError


def x_of_t(t: Any) -> Any:
    """``x = (1 + e^{2t})^{-1} = (1 - tanh t) / 2``, overflow-free for large ``|t|``."""
    return scipy.special.expit(-2 * np.asarray(t, dtype=float))[()]


def _complement_of_x(t: float) -> float:
    """``1 - x_of_t(t)`` without cancellation."""
    return float(scipy.special.expit(2 * t))


def _log_cosh(t: float) -> float:
    t = abs(t)
    return t + math.log1p(math.exp(-2 * t)) - math.log(2)


def _to_number(value: Any) -> float | complex:
    if isinstance(value, complex):
        return value
    return float(value)


def hypergeometric_params(s: SpectralParam, j: int) -> HypergeometricParams:
    """``(a, b, c) = (λ+ρ+j, λ-ρ+1-j, 1+λ)``."""
    lam, rho = s.lam, s.rho
    return HypergeometricParams(lam + rho + j, lam - rho + 1 - j, 1 + lam)


def ladder_index(s: SpectralParam, j: int) -> int | None:
    """``l = j - (λ-ρ+1)`` when it is a non-negative integer, else None."""
    k = s.integer_offset
    if k is None:
        return None
    l = j - (k + 1)
    return l if l >= 0 else None


def casimir_eigenvalue(s: SpectralParam) -> Any:
    """``λ² - ρ²``, exact for rational λ."""
    value = s.lam**2 - s.rho**2
    if isinstance(value, complex) and value.imag == 0:
        return value.real
    return value


def _compose(
    prefactor: tuple[Any, Any, Any],
    inner: tuple[Any, Any, Any],
    variable: tuple[float, float],
) -> tuple[Any, Any, Any]:
    """Derivatives in t of ``C(t) · W(u(t))`` from those of C, of W in u and of u."""
    c0, c1, c2 = prefactor
    w0, w1, w2 = inner
    du, d2u = variable
    wt1 = w1 * du
    wt2 = w2 * du**2 + w1 * d2u
    return c0 * w0, c1 * w0 + c0 * wt1, c2 * w0 + 2 * c1 * wt1 + c0 * wt2


def _cosh_power(mu: Any, t: float) -> tuple[Any, Any, Any]:
    """``C = (cosh t)^{-μ}`` with ``C' = -μ tanh t C`` and ``C'' = (μ² tanh² - μ sech²) C``."""
    z = math.tanh(t)
    c0 = np.exp(-mu * _log_cosh(t))
    return c0, -mu * z * c0, (mu**2 * z**2 - mu * (1 - z**2)) * c0


@dataclass(frozen=True)
class RadialSolution:
    """A selected solution of the radial equation, usable as an evaluator in t.

    Parameters
    ----------
    spectral : SpectralParam
        The parameter λ.
    j : int
        K-type index.
    branch : Branch
        ``PHI_PLUS`` is φ_{λ,j}; ``PHI_REFLECTED`` is ``t ↦ φ_{λ,j}(-t)``;
        ``PHI_NEG_LAMBDA`` is φ_{-λ,j}; ``SECOND_KIND_LOG`` is the Frobenius
        solution ``(cosh t)^{-λ-ρ} G(x)`` for λ a positive integer.
    tol : float, default 1e-12
        Series tolerance.
    """

    spectral: SpectralParam
    j: int
    branch: Branch = Branch.PHI_PLUS
    tol: float = DEFAULT_SERIES_TOL

    def __post_init__(self):
        if self.j < 0:
            raise DomainError(f"K-type index must be >= 0, got {self.j}")
        if self.branch is Branch.SECOND_KIND_LOG and not self.spectral.is_positive_integer:
            raise DomainError(
                f"The logarithmic second solution needs λ in N, got λ = {self.spectral.lam}"
            )
        if self.branch is not Branch.PHI_NEG_LAMBDA and is_nonpositive_integer(1 + self._lambda):
            raise DomainError(f"φ_(λ,j) is undefined for λ = {self._lambda} in -N")
        # c = 1 - λ in -N_0 without early termination raises here
        hypergeometric_params(self._spectral, self.j)

    @property
    def _lambda(self) -> Any:
        if self.branch is Branch.PHI_NEG_LAMBDA:
            return -self.spectral.lam
        return self.spectral.lam

    @property
    def _spectral(self) -> SpectralParam:
        if self.branch is Branch.PHI_NEG_LAMBDA:
            return self.spectral.negated()
        return self.spectral

    @property
    def params(self) -> HypergeometricParams:
        return hypergeometric_params(self._spectral, self.j)

    @property
    def l(self) -> int | None:
        """Jacobi degree when the closed form applies (φ_{λ,j} with j in λ-ρ+1+N_0)."""
        if self.branch in (Branch.PHI_PLUS, Branch.PHI_REFLECTED):
            return ladder_index(self.spectral, self.j)
        return None

    @property
    def exponent(self) -> Any:
        """``μ`` in the prefactor ``(cosh t)^{-μ}``."""
        return self._lambda + self.spectral.rho

    @property
    def jacobi_normalisation(self) -> Fraction | float:
        """``l! / (λ+1)_l``."""
        l = self.l
        return Fraction(math.factorial(l)) / pochhammer(self.spectral.lam + 1, l)

    def _inner(self, t: float) -> tuple[tuple[Any, Any, Any], tuple[float, float]]:
        """Derivatives of ``w`` in its own variable, and of that variable in t."""
        l = self.l
        if l is not None:
            z = math.tanh(t)
            alpha = self.spectral.lam
            norm = _to_number(self.jacobi_normalisation)
            inner = tuple(
                norm * _to_number(jacobi_derivative(l, alpha, z, k) if k else jacobi_poly(l, alpha, z))
                for k in range(3)
            )
            return inner, (1 - z**2, -2 * z * (1 - z**2))

        x = float(x_of_t(t))
        y = _complement_of_x(t)
        variable = (-2 * x * y, 4 * x * y * (1 - 2 * x))
        if self.branch is Branch.SECOND_KIND_LOG:
            return self.frobenius.derivatives(x), variable
        if x <= 0.5:
            return hyp2f1_derivatives(self.params, x, self.tol), variable
        return hyp2f1_derivatives(self.params, x, self.tol, y=y), variable

    @cached_property
    def frobenius(self) -> FrobeniusSolution:
        """The Frobenius series of the ``SECOND_KIND_LOG`` branch."""
        return frobenius_second_solution(self.params)

    def transformed_derivatives(self, t: float) -> tuple[Any, Any, Any]:
        """Derivatives of ``Φ(t) = (cosh t)^{μ} f(t)``, i.e. of ``w(x(t))``."""
        if self.branch is Branch.PHI_REFLECTED:
            w0, w1, w2 = self._transformed_unreflected(-t)
            return w0, -w1, w2
        return self._transformed_unreflected(t)

    def _transformed_unreflected(self, t: float) -> tuple[Any, Any, Any]:
        inner, variable = self._inner(t)
        return _compose((1, 0, 0), inner, variable)

    def derivatives(self, t: float) -> tuple[Any, Any, Any]:
        """``(f, f', f'')`` at ``t``, without finite differences."""
        if self.branch is Branch.PHI_REFLECTED:
            f0, f1, f2 = self._derivatives_unreflected(-t)
            return f0, -f1, f2
        return self._derivatives_unreflected(t)

    def _derivatives_unreflected(self, t: float) -> tuple[Any, Any, Any]:
        inner, variable = self._inner(t)
        return _compose(_cosh_power(_to_number(self.exponent), t), inner, variable)

    def __call__(self, t: float) -> Any:
        t = float(t)
        if self.branch is Branch.PHI_REFLECTED:
            t = -t
        return _cosh_power(_to_number(self.exponent), t)[0] * self._inner_value(t)

    def _inner_value(self, t: float) -> Any:
        l = self.l
        if l is not None:
            return _to_number(self.jacobi_normalisation) * jacobi_poly(l, self.spectral.lam, math.tanh(t))
        x = float(x_of_t(t))
        if self.branch is Branch.SECOND_KIND_LOG:
            return self.frobenius(x)
        if x <= 0.5:
            return hyp2f1(self.params, x, self.tol).value
        return hyp2f1_complement(self.params, _complement_of_x(t), self.tol).value

    def evaluate(self, ts: Any) -> np.ndarray:
        """Vectorised evaluation on a grid of t values."""
        values = [self(t) for t in np.ravel(ts)]
        return np.reshape(np.array(values), np.shape(ts))


def radial_solution(
    s: SpectralParam,
    j: int,
    branch: Branch = Branch.PHI_PLUS,
    tol: float = DEFAULT_SERIES_TOL,
) -> RadialSolution:
    """Build the evaluator of a radial solution branch."""
    return RadialSolution(s, j, branch, tol)


def phi_radial(
    s: SpectralParam,
    j: int,
    t: float,
    tol: float = DEFAULT_SERIES_TOL,
) -> Any:
    """``φ_{λ,j}(t) = (cosh t)^{-λ-ρ} F(λ+ρ+j, λ-ρ+1-j; 1+λ; (1+e^{2t})^{-1})``.

    For ``j = λ-ρ+1+l`` the closed form
    ``l!/(λ+1)_l · (cosh t)^{-λ-ρ} P_l^{(λ,λ)}(tanh t)`` is used. The
    reflection ``φ̌(t) = φ(-t)`` is obtained by passing ``-t``.

    Raises
    ------
    DomainError
        If λ lies in -N.
    """
    return RadialSolution(s, j, Branch.PHI_PLUS, tol)(t)


def second_solution(s: SpectralParam, j: int) -> RadialSolution:
    """The solution independent of φ_{λ,j} when ``λ - ρ`` is an integer.

    φ_{-λ,j} for n even, the logarithmic Frobenius solution for n odd.
    """
    s.require_positive("second_solution_radial")
    if s.integer_offset is None:
        raise DomainError(f"Second solutions are built for λ - ρ in Z, got {s}")
    if s.geometry.even_dimension:
        return RadialSolution(s, j, Branch.PHI_NEG_LAMBDA)
    return RadialSolution(s, j, Branch.SECOND_KIND_LOG)


def second_solution_radial(s: SpectralParam, j: int, t: float) -> Any:
    """Value of :func:`second_solution` at ``t``."""
    return second_solution(s, j)(t)


def asymptotic_constant_estimate(
    s: SpectralParam,
    j: int,
    t_probe: float = DEFAULT_ASYMPTOTIC_PROBE,
) -> tuple[Any, Any]:
    """Probe ``e^{-2λT}(cosh T)^{λ+ρ} φ_{λ,j}(-T)`` against the Gauss constant A.

    Returns
    -------
    tuple
        ``(estimate, exact)`` where ``exact`` is
        ``Γ(1+λ)Γ(λ) / (Γ(λ+ρ+j)Γ(λ-ρ+1-j))``, an ExactScalar for rational λ
        (zero exactly when ``j`` lies in ``λ-ρ+N``).
    """
    s.require_positive("asymptotic_constant_estimate")
    if t_probe < MIN_ASYMPTOTIC_PROBE:
        raise DomainError(f"t_probe must be >= {MIN_ASYMPTOTIC_PROBE}, got {t_probe}")

    solution = RadialSolution(s, j)
    params = solution.params
    lam = _to_number(s.lam)
    damping = np.exp(-2 * lam * t_probe)
    if solution.l is not None:
        inner = solution.transformed_derivatives(-t_probe)[0]
    else:
        inner = hyp2f1_complement(params, float(x_of_t(t_probe)), solution.tol).value
    estimate = damping * inner
    if isinstance(estimate, complex) and estimate.imag == 0:
        estimate = estimate.real
    return estimate, gauss_limit_constant(params)
