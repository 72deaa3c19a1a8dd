"""Verification suites run by ``hypspec verify``.

Each suite has per-cell checks, run over the ``(n, λ)`` sweep (in parallel
when requested), and optionally fixed checks that do not depend on the sweep.
A numerical check passes when its residual is strictly below the tolerance,
so a zero tolerance fails every numerical check.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import Any

import mpmath
import numpy as np
import sympy

from .config import RunConfig
from .report import CheckRecord
from ..core.eigen import (
    Branch,
    Geometry,
    RadialSolution,
    SpectralParam,
    ZonalHarmonic,
    asymptotic_constant_estimate,
    ladder_index,
    radial_ode_residual,
    second_solution,
    wronskian,
)
from ..core.ladder import (
    certify_ladder_identity,
    derive_ladder_coefficients,
    equivalence_invariants,
    irreducibility_connectivity,
    ladder_coeffs,
    ladder_residual,
    theorem2_cross_check,
)
from ..core.specfun import (
    ExactScalar,
    GammaFlag,
    HypergeometricParams,
    frobenius_second_solution,
    gamma_exact,
    gamma_float,
    hyp2f1,
    hypergeometric_ode_residual,
    jacobi_coefficients,
    jacobi_poly,
)
from ..core.ladder.coefficients import LAMBDA, L, RHO
from ..core.specfun.jacobi import Z
from ..core.spectrum import (
    discrete_ktype_set,
    in_theorem2_regime,
    lp_membership_analytic,
    weighted_lp_norm,
)
from ..utils.constants import DIVERGENCE_RATE_SLACK
from ..utils.errors import UsageError
from ..utils.parallel import process_cells

SUITE_NAMES = ("ode", "parity", "asymptotics", "ladder", "norms", "equivalence", "specfun")

# K-types per cell in the residual sweeps
ODE_J_LIMIT = 4
# K-types per cell for the certification of the ladder identity
LADDER_L_LIMIT = 10
# Smallest λ for the asymptotic probe at t = 12
ASYMPTOTIC_MIN_LAMBDA = 1
WRONSKIAN_FLOOR = 1e-12
NORM_ORACLE_TOL = 1e-9
# series tolerance of the 2F1 evaluations compared against mpmath
ORACLE_SERIES_TOL = 1e-15


def _params(n: int, lam: Any, **extra: Any) -> dict[str, Any]:
    return {"n": n, "lambda": lam, **extra}


def _max(values: Iterable[float]) -> float:
    values = [float(abs(v)) for v in values]
    if any(not math.isfinite(v) for v in values):
        return math.inf
    return max(values, default=0.0)


# ode


def _ode_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    s = SpectralParam(Geometry(n), lam)
    grid = config.t_grid
    tol = config.tol("ode_tol")
    records = []

    branches = [Branch.PHI_PLUS, Branch.PHI_REFLECTED]
    if s.integer_offset is not None:
        branches.append(Branch.PHI_NEG_LAMBDA if s.geometry.even_dimension else Branch.SECOND_KIND_LOG)

    for branch in branches:
        ts = grid
        if branch is Branch.SECOND_KIND_LOG:
            ts = np.linspace(0.5, max(grid[-1], 1.0), len(grid))
        worst = 0.0
        for j in range(min(config.j_max, ODE_J_LIMIT) + 1):
            solution = RadialSolution(s, j, branch)
            with warnings.catch_warnings():
                # degenerate Frobenius solutions below D_λ are expected here
                warnings.simplefilter("ignore", UserWarning)
                residuals = [radial_ode_residual(s, j, solution, t, relative=True) for t in ts]
            worst = max(worst, _max(residuals))
        records.append(
            CheckRecord.numerical("ode", f"residual_{branch.value}", _params(n, lam), worst, tol)
        )

    if s.integer_offset is not None:
        for j in range(min(config.j_max, ODE_J_LIMIT) + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UserWarning)
                w = wronskian(RadialSolution(s, j), second_solution(s, j), 1.0)
            records.append(
                CheckRecord.exact(
                    "ode", "wronskian_nonzero", _params(n, lam, j=j), abs(w) > WRONSKIAN_FLOOR
                )
            )
    return records


# parity


def _parity_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    s = SpectralParam(Geometry(n), lam)
    grid = config.t_grid
    records = []
    for j in discrete_ktype_set(s).up_to(config.j_max):
        solution = RadialSolution(s, j)
        l = solution.l
        forward = solution.evaluate(grid)
        backward = solution.evaluate(-grid)
        scale = _max(forward)
        deviation = _max(backward - (-1) ** l * forward) / scale if scale else 0.0
        records.append(
            CheckRecord.numerical(
                "parity", "reflection", _params(n, lam, j=j), deviation, config.tol("parity_tol")
            )
        )
        if l <= LADDER_L_LIMIT:
            monomials = jacobi_coefficients(l, s.lam).monoms()
            records.append(
                CheckRecord.exact(
                    "parity",
                    "coefficient_parity",
                    _params(n, lam, l=l),
                    all((degree - l) % 2 == 0 for (degree,) in monomials),
                )
            )
    return records


# asymptotics


def _asymptotics_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    s = SpectralParam(Geometry(n), lam)
    records = []
    tol = config.tol("asym_tol")

    if s.is_exact and s.lam >= ASYMPTOTIC_MIN_LAMBDA:
        worst = 0.0
        pattern = True
        for j in range(config.j_max + 1):
            estimate, exact = asymptotic_constant_estimate(s, j)
            zero = exact.is_zero if isinstance(exact, ExactScalar) else exact == 0
            pattern &= zero == (ladder_index(s, j) is not None)
            if not zero:
                reference = float(exact)
                worst = max(worst, abs(estimate - reference) / abs(reference))
        records.append(CheckRecord.numerical("asymptotics", "limit_constant", _params(n, lam), worst, tol))
        records.append(CheckRecord.exact("asymptotics", "limit_zero_pattern", _params(n, lam), pattern))

    if s.integer_offset is not None and s.geometry.even_dimension:
        t = 12.0
        worst = 0.0
        for j in range(min(config.j_max, ODE_J_LIMIT) + 1):
            value = RadialSolution(s, j, Branch.PHI_NEG_LAMBDA)(t)
            normalised = value * math.exp((float(s.rho) - float(s.lam)) * math.log(math.cosh(t)))
            worst = max(worst, abs(normalised - 1))
        records.append(
            CheckRecord.numerical("asymptotics", "second_solution_limit", _params(n, lam), worst, tol)
        )
    return records


# ladder


def _ladder_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    g = Geometry(n)
    s = SpectralParam(g, lam)
    k = s.integer_offset
    d_lambda = discrete_ktype_set(s)
    if d_lambda.empty:
        return []

    records = []
    first_l = d_lambda.j_min - (k + 1)
    certified, pattern = True, True
    for l in range(first_l, first_l + min(config.j_max, LADDER_L_LIMIT) + 1):
        certified &= certify_ladder_identity(s, l)
        coeffs = ladder_coeffs(s, l)
        pattern &= coeffs.A != 0 and (coeffs.B == 0) == (l == 0 or k + l + 1 == 0)
    records.append(CheckRecord.exact("ladder", "identity_certified", _params(n, lam), certified))
    records.append(CheckRecord.exact("ladder", "zero_pattern", _params(n, lam), pattern))

    worst = _max(ladder_residual(s, j, config.t_grid) for j in d_lambda.up_to(config.j_max))
    records.append(
        CheckRecord.numerical("ladder", "ladder_residual", _params(n, lam), worst, config.tol("fit_tol"))
    )

    connected, certificate = irreducibility_connectivity(g, s, config.j_max)
    bottoms_only = certificate.zero_lowering == certificate.nodes[:1]
    records.append(
        CheckRecord.exact("ladder", "connectivity", _params(n, lam), connected and bottoms_only)
    )
    return records


def _ladder_fixed(config: RunConfig) -> list[CheckRecord]:
    lam, rho, l = LAMBDA, RHO, L
    a, b = derive_ladder_coefficients()
    expected_a = -(lam + rho + l) * (2 * lam + l + 1) / (2 * lam + 2 * l + 1)
    expected_b = l * (lam - rho + l + 1) / (2 * lam + 2 * l + 1)
    ok = sympy.simplify(a - expected_a) == 0 and sympy.simplify(b - expected_b) == 0
    return [CheckRecord.exact("ladder", "symbolic_derivation", {}, ok)]


# norms


def _norms_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    s = SpectralParam(Geometry(n), lam)
    d_lambda = discrete_ktype_set(s)
    if d_lambda.empty:
        return []

    records = []
    tol = config.tol("norm_tol")
    for j in d_lambda.head(3):
        _, diagnostic = weighted_lp_norm(s, j)
        records.append(
            CheckRecord.numerical("norms", "l2_converges", _params(n, lam, j=j), diagnostic.rel_change, tol)
        )

    # the rate slack collapses with a zero norm tolerance
    rate_tol = DIVERGENCE_RATE_SLACK if tol > 0 else 0.0
    outside = list(range(d_lambda.j_min))[:2]
    for j in outside:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _, diagnostic = weighted_lp_norm(s, j)
        deviation = abs(diagnostic.measured_rate - diagnostic.predicted_rate) / diagnostic.predicted_rate
        records.append(
            CheckRecord.numerical("norms", "divergence_rate", _params(n, lam, j=j), deviation, rate_tol)
        )

    agree = all(
        lp_membership_analytic(s, j, Branch.PHI_PLUS).in_L2 == (j in d_lambda)
        for j in range(config.j_max + 1)
    )
    records.append(CheckRecord.exact("norms", "analytic_l2_pattern", _params(n, lam), agree))

    branch = Branch.PHI_NEG_LAMBDA if s.geometry.even_dimension else Branch.SECOND_KIND_LOG
    threshold = lp_membership_analytic(s, d_lambda.j_min, branch).lp_threshold
    expected = 2 * s.rho / (s.rho - s.lam) if s.lam < s.rho else None
    records.append(
        CheckRecord.exact(
            "norms", "second_solution_threshold", _params(n, lam, threshold=threshold), threshold == expected
        )
    )
    return records


def _norms_fixed(config: RunConfig) -> list[CheckRecord]:
    # ‖φ_{1,0}‖² for n = 5 reduces to ∫ sech²t dt = 2
    value, _ = weighted_lp_norm(SpectralParam(Geometry(5), 1), 0)
    tol = min(config.tol("norm_tol"), NORM_ORACLE_TOL)
    return [CheckRecord.numerical("norms", "closed_form_norm", _params(5, 1, j=0), abs(value - 2) / 2, tol)]


# equivalence


def _equivalence_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    g = Geometry(n)
    s = SpectralParam(g, lam)
    if not in_theorem2_regime(s):
        return []

    report = equivalence_invariants(g, s, config.j_max)
    params = _params(n, lam, j_max=config.j_max)
    records = [
        CheckRecord.numerical(
            "equivalence", "invariant_products", params, report.max_rel_deviation, config.tol("equiv_tol")
        ),
        CheckRecord.numerical(
            "equivalence", "fit_residual", params, _max(report.fit_residuals), config.tol("fit_tol")
        ),
        CheckRecord.exact("equivalence", "casimir_match", params, report.casimir_match),
    ]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cross = theorem2_cross_check(g, s)
    records.append(CheckRecord.exact("equivalence", "l2_split", _params(n, lam, p=cross.p), cross.passed))
    return records


# specfun

_HYP2F1_SAMPLES = (
    (0.5, 1.5, 2.25, 0.3),
    (1.25, 0.75, 3.5, -0.6),
    (2.0, 3.5, 4.25, 0.8),
    (0.75, 1.25, 1.5, 0.95),
    (1.5, 2.5, 3.0, -0.9),
)


def _specfun_fixed(config: RunConfig) -> list[CheckRecord]:
    records = []
    series_tol = config.tol("series_tol")

    gamma_ok = (
        gamma_exact(Fraction(1, 2)) == ExactScalar(Fraction(1), 1)
        and gamma_exact(Fraction(5, 2)) == ExactScalar(Fraction(3, 4), 1)
        and gamma_exact(Fraction(-1, 2)) == ExactScalar(Fraction(-2), 1)
        and gamma_exact(0) is GammaFlag.POLE
        and gamma_float(171.5) is GammaFlag.OVERFLOW
    )
    records.append(CheckRecord.exact("specfun", "gamma_exact", {}, gamma_ok))

    worst = 0.0
    with mpmath.workdps(30):
        for a, b, c, x in _HYP2F1_SAMPLES:
            value = hyp2f1(HypergeometricParams(a, b, c), x, tol=ORACLE_SERIES_TOL).value
            reference = float(mpmath.hyp2f1(a, b, c, x))
            worst = max(worst, abs(value - reference) / abs(reference))
    records.append(CheckRecord.numerical("specfun", "hyp2f1_oracle", {}, worst, series_tol))

    exact_ok, worst = True, 0.0
    for alpha in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
        for l in range(7):
            poly = jacobi_coefficients(l, alpha)
            reference = sympy.jacobi(l, sympy.Rational(alpha), sympy.Rational(alpha), Z)
            exact_ok &= sympy.expand(reference - poly.as_expr()) == 0
            exact_value = float(jacobi_poly(l, alpha, Fraction(3, 10)))
            float_value = jacobi_poly(l, alpha, 0.3)
            worst = max(worst, abs(float_value - exact_value) / max(abs(exact_value), 1.0))
    records.append(CheckRecord.exact("specfun", "jacobi_coefficients", {}, exact_ok))
    records.append(CheckRecord.numerical("specfun", "jacobi_recurrence", {}, worst, series_tol))

    worst = 0.0
    for n in config.n_values:
        g = Geometry(n)
        for j in range(min(config.j_max, ODE_J_LIMIT) + 1):
            harmonic = ZonalHarmonic(g, j)
            for theta in (0.3, 1.1, 2.0):
                value = harmonic(math.cos(theta))
                laplacian = harmonic.angular_laplacian(theta)
                scale = max(abs(laplacian), abs(harmonic.eigenvalue() * value), 1.0)
                worst = max(worst, abs(laplacian - harmonic.eigenvalue() * value) / scale)
    records.append(CheckRecord.numerical("specfun", "zonal_eigenfunction", {}, worst, config.tol("ode_tol")))
    return records


def _specfun_cell(cell: tuple[int, Any], config: RunConfig) -> list[CheckRecord]:
    n, lam = cell
    s = SpectralParam(Geometry(n), lam)
    if s.geometry.even_dimension or not s.is_positive_integer:
        return []
    worst = 0.0
    for j in range(min(config.j_max, ODE_J_LIMIT) + 1):
        params = RadialSolution(s, j).params
        solution = frobenius_second_solution(params, warn=False)
        worst = max(
            worst,
            _max(hypergeometric_ode_residual(params, solution, x, relative=True) for x in (0.05, 0.2, 0.35, 0.5)),
        )
    return [CheckRecord.numerical("specfun", "frobenius_residual", _params(n, lam), worst, config.tol("ode_tol"))]


_CELL_CHECKS: dict[str, Callable[[tuple[int, Any], RunConfig], list[CheckRecord]]] = {
    "ode": _ode_cell,
    "parity": _parity_cell,
    "asymptotics": _asymptotics_cell,
    "ladder": _ladder_cell,
    "norms": _norms_cell,
    "equivalence": _equivalence_cell,
    "specfun": _specfun_cell,
}

_FIXED_CHECKS: dict[str, Callable[[RunConfig], list[CheckRecord]]] = {
    "ladder": _ladder_fixed,
    "norms": _norms_fixed,
    "specfun": _specfun_fixed,
}

# suites that only use cells with λ - ρ in Z
_INTEGER_OFFSET_SUITES = {"parity", "ladder", "norms", "equivalence"}


def _run_cell(cell: tuple[int, Any], suite: str, config: RunConfig) -> list[CheckRecord]:
    return _CELL_CHECKS[suite](cell, config)


def validate_suites(suites: Iterable[str]) -> list[str]:
    """Deduplicated suite names in the canonical order.

    Raises
    ------
    UsageError
        On an unknown suite name.
    """
    suites = list(suites)
    unknown = sorted(set(suites) - set(SUITE_NAMES))
    if unknown:
        raise UsageError(f"Unknown suites: {unknown}. Valid options: {list(SUITE_NAMES)}")
    return [name for name in SUITE_NAMES if name in suites]


def run_suites(config: RunConfig, suites: Iterable[str]) -> list[CheckRecord]:
    """Run the named suites over the sweep of ``config``.

    Records come out grouped by suite in canonical order, fixed checks
    first, then cells in sweep order. A cell that raises becomes a failed
    ``error`` record carrying the exception message.
    """
    records: list[CheckRecord] = []
    for suite in validate_suites(suites):
        if suite in _FIXED_CHECKS:
            try:
                records.extend(_FIXED_CHECKS[suite](config))
            except Exception as exc:
                records.append(CheckRecord.error(suite, {}, f"{type(exc).__name__}: {exc}"))

        cells = config.cells(integer_offsets=suite in _INTEGER_OFFSET_SUITES)
        results, failed = process_cells(
            cells,
            _run_cell,
            func_kwargs={"suite": suite, "config": config},
            max_workers=config.workers,
        )
        errors = dict((cell, message) for cell, message in failed)
        for cell, result in zip(cells, results):
            if result is None:
                n, lam = cell
                records.append(CheckRecord.error(suite, _params(n, lam), errors.get(cell, "")))
            else:
                records.extend(result)
    return records
