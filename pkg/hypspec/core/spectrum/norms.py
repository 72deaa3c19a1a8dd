"""L^p membership of radial solutions under the measure ``cosh^{2ρ} t dt``.

Membership is decided from the growth exponents at ``t → ±∞``; quadrature of
the truncated integral corroborates the verdict.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from scipy import integrate

from .ktypes import Parity, discrete_ktype_set, parity_of_U
from ..eigen.geometry import Branch, SpectralParam
from ..eigen.radial import RadialSolution
from ...utils.constants import (
    CONVERGENCE_REL_CHANGE,
    DEFAULT_TRUNCATION,
    DIVERGENCE_EPSREL,
    DIVERGENCE_RATE_SLACK,
    QUADRATURE_EPSREL,
    QUADRATURE_LIMIT,
    TRUNCATION_COMPARISON_OFFSET,
)
from ...utils.errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class MembershipVerdict:
    """L², temperedness and L^p verdict for one solution.

    ``lp_threshold`` is the p* with membership in L^p exactly for ``p > p*``;
    it is set only when the solution is not in L² but lies in some L^p.
    """

    in_L2: bool
    tempered: bool
    lp_threshold: Fraction | float | None
    parity_class: Parity


def growth_exponents(s: SpectralParam, j: int, branch: Branch) -> tuple[Any, Any]:
    """Exponents ``(e_-, e_+)`` with ``|f(t)| ~ e^{e_± |t|}`` as ``t → ±∞``.

    Exact for rational λ. The exponent on a side where the Gauss constant
    vanishes is the decaying one.
    """
    s.require_positive("growth_exponents")
    lam = s.lam if s.is_exact else s.real
    rho = s.rho
    decay, growth = -(lam + rho), lam - rho

    if branch in (Branch.PHI_PLUS, Branch.PHI_REFLECTED):
        minus = decay if j in discrete_ktype_set(s) else growth
        plus = decay
        return (minus, plus) if branch is Branch.PHI_PLUS else (plus, minus)
    # φ_{-λ,j} and the logarithmic solution grow like (cosh t)^{λ-ρ} towards +∞
    # and are dominated by the same exponent towards -∞
    return growth, growth


def _worst_exponent(s: SpectralParam, j: int, branch: Branch) -> Any:
    minus, plus = growth_exponents(s, j, branch)
    if branch is Branch.SECOND_KIND_LOG:
        return plus
    return max(minus, plus)


def lp_membership_analytic(s: SpectralParam, j: int, branch: Branch) -> MembershipVerdict:
    """Decide membership from the growth exponents.

    ``|f|^p cosh^{2ρ}`` behaves like ``e^{(p e + 2ρ)|t|}``, so f lies in L^p
    iff ``p e + 2ρ < 0``: in L² when ``e = -(λ+ρ)``, and for
    ``e = λ - ρ`` only for ``p > 2ρ/(ρ - Re λ)`` (never if ``Re λ >= ρ``).
    """
    e = _worst_exponent(s, j, branch)
    rho = s.rho
    in_l2 = 2 * e + 2 * rho < 0
    tempered = e + rho <= 0
    threshold = None
    if not in_l2 and e < 0:
        threshold = 2 * rho / -e
    parity = Parity.NONE
    if branch is Branch.PHI_PLUS and j in discrete_ktype_set(s):
        parity = parity_of_U(s)
    return MembershipVerdict(in_l2, tempered, threshold, parity)


@dataclass(frozen=True)
class NormDiagnostic:
    """Truncation study of ``∫ |f|^p cosh^{2ρ} t dt``.

    ``value`` is the integral up to T plus ``tail`` and ``value_shorter`` the
    integral up to ``T - offset``. ``tail`` estimates the integral beyond T
    from the integrand at T and the exponent ``predicted_rate``; it is 0 when
    the integrand does not decay. ``measured_rate`` is
    ``log(value / value_shorter) / offset``, comparable with ``predicted_rate``
    when the integral diverges.
    """

    value: float
    tail: float
    value_shorter: float
    truncation: float
    rel_change: float
    converging: bool
    predicted_rate: float
    measured_rate: float
    rate_consistent: bool | None


def _log_cosh(t: float) -> float:
    t = abs(t)
    return t + math.log1p(math.exp(-2 * t)) - math.log(2)


def _quad(
    func: Callable[[float], float], lower: float, upper: float, epsrel: float = QUADRATURE_EPSREL
) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, _ = integrate.quad(
            func, lower, upper, epsrel=epsrel, epsabs=0.0, limit=QUADRATURE_LIMIT
        )
    if not math.isfinite(value):
        raise ConvergenceError(f"Quadrature on [{lower}, {upper}] returned {value}")
    return value


def lp_quadrature(
    f: Callable[[float], Any],
    rho: Any,
    p: float,
    predicted_rate: float,
    truncation: float = DEFAULT_TRUNCATION,
    offset: float = TRUNCATION_COMPARISON_OFFSET,
    half_line: bool = False,
) -> NormDiagnostic:
    """Integrate ``|f|^p cosh^{2ρ}`` over ``[-T, T]`` (``[0, T]`` if ``half_line``).

    A decaying integrand (``predicted_rate < 0``) gets the closed-form tail
    beyond T; a growing one is integrated at the looser ``DIVERGENCE_EPSREL``.

    Parameters
    ----------
    f : callable
        Evaluator in t.
    rho : Fraction or float
        ρ of the geometry.
    p : float
        Exponent, ``p >= 1``.
    predicted_rate : float
        Expected exponential rate of the integrand, ``p e + 2ρ``.
    truncation : float, default 25
        T.
    offset : float, default 5
        The integral up to ``T - offset`` is compared with the one up to T.
    half_line : bool, default False
        Integrate over ``[0, T]`` only.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if not truncation > offset > 0:
        raise DomainError(f"Need T > offset > 0, got T = {truncation}, offset = {offset}")

    rho = float(rho)

    def integrand(t: float) -> float:
        magnitude = abs(f(t))
        if magnitude == 0:
            return 0.0
        return math.exp(p * math.log(magnitude) + 2 * rho * _log_cosh(t))

    epsrel = DIVERGENCE_EPSREL if predicted_rate > 0 else QUADRATURE_EPSREL
    inner = truncation - offset
    value_shorter = _quad(integrand, 0.0, inner, epsrel)
    outer = _quad(integrand, inner, truncation, epsrel)
    if not half_line:
        value_shorter += _quad(integrand, -inner, 0.0, epsrel)
        outer += _quad(integrand, -truncation, -inner, epsrel)

    tail = 0.0
    if predicted_rate < 0:
        # ∫_T^∞ C e^{γt} dt = C e^{γT} / -γ
        edge = integrand(truncation) if half_line else integrand(truncation) + integrand(-truncation)
        tail = edge / -predicted_rate
    value = value_shorter + outer + tail

    rel_change = abs(outer) / abs(value) if value else 0.0
    converging = rel_change < CONVERGENCE_REL_CHANGE
    measured = math.log(value / value_shorter) / offset if value_shorter > 0 else math.inf
    rate_consistent = None
    if predicted_rate > 0:
        rate_consistent = abs(measured - predicted_rate) <= DIVERGENCE_RATE_SLACK * predicted_rate
        if not rate_consistent:
            warnings.warn(
                f"Measured growth rate {measured:.4g} differs from the predicted "
                f"{predicted_rate:.4g} by more than {DIVERGENCE_RATE_SLACK:.0%}",
                stacklevel=2,
            )
    return NormDiagnostic(
        value=value,
        tail=tail,
        value_shorter=value_shorter,
        truncation=truncation,
        rel_change=rel_change,
        converging=converging,
        predicted_rate=predicted_rate,
        measured_rate=measured,
        rate_consistent=rate_consistent,
    )


def weighted_lp_norm(
    s: SpectralParam,
    j: int,
    branch: Branch = Branch.PHI_PLUS,
    p: float = 2.0,
    truncation: float = DEFAULT_TRUNCATION,
    offset: float = TRUNCATION_COMPARISON_OFFSET,
) -> tuple[float, NormDiagnostic]:
    """``∫_{-T}^{T} |f(t)|^p cosh^{2ρ} t dt`` for a radial solution branch.

    The logarithmic branch is integrated over ``[0, T]``, where its growth
    decides membership.

    Returns
    -------
    tuple[float, NormDiagnostic]
        The truncated integral and its convergence diagnostic.

    Raises
    ------
    ConvergenceError
        If the quadrature fails.
    """
    solution = RadialSolution(s, j, branch)
    e = float(_worst_exponent(s, j, branch))
    predicted = p * e + 2 * float(s.rho)
    diagnostic = lp_quadrature(
        solution,
        s.rho,
        p,
        predicted,
        truncation=truncation,
        offset=offset,
        half_line=branch is Branch.SECOND_KIND_LOG,
    )
    return diagnostic.value, diagnostic


def membership_agrees(verdict: MembershipVerdict, diagnostic: NormDiagnostic, p: float) -> bool:
    """Whether a quadrature diagnostic corroborates the analytic verdict at exponent p."""
    if verdict.in_L2 and p >= 2:
        return diagnostic.converging
    threshold = verdict.lp_threshold
    if threshold is None:
        return not diagnostic.converging
    return diagnostic.converging == (p > threshold)
