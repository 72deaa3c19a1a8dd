import math
import warnings
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from hypspec.core.eigen import (
    Branch,
    Geometry,
    RadialSolution,
    SpectralParam,
    ZonalHarmonic,
    asymptotic_constant_estimate,
    casimir_eigenvalue,
    hypergeometric_params,
    ladder_index,
    phi_radial,
    radial_ode_residual,
    radial_solution,
    second_solution,
    second_solution_radial,
    transformed_ode_residual,
    wronskian,
    x_of_t,
    zonal_harmonic,
)
from hypspec.core.specfun import ExactScalar
from hypspec.core.specfun.hypergeometric import _continued
from hypspec.utils.errors import DomainError


def _spectral(n, lam):
    return SpectralParam(Geometry(n), lam)


def _phi_reference(n, lam, j, t):
    """φ_{λ,j}(t) straight from the defining formula, via mpmath."""
    rho = mpmath.mpf(n - 1) / 2
    if isinstance(lam, Fraction):
        lam = mpmath.mpf(lam.numerator) / lam.denominator
    else:
        lam = mpmath.mpf(lam)
    x = 1 / (1 + mpmath.exp(2 * mpmath.mpf(t)))
    value = mpmath.cosh(t) ** (-lam - rho) * mpmath.hyp2f1(lam + rho + j, lam - rho + 1 - j, 1 + lam, x)
    return float(value)


def test_geometry():
    g = Geometry(5)
    assert g.rho == 2
    assert Geometry(4).rho == Fraction(3, 2)
    assert Geometry(4).zonal_index == Fraction(1, 2)
    assert g.ktype_eigenvalue(3) == 3 * 6
    with pytest.raises(DomainError):
        Geometry(2)
    with pytest.raises(DomainError):
        Geometry(4.0)


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        ("5/2", Fraction(5, 2)),
        (2.5, Fraction(5, 2)),
        (3, Fraction(3)),
        (" 7/4 ", Fraction(7, 4)),
    ],
)
def test_spectral_param_keeps_rationals_exact(value, expected):
    s = _spectral(5, value)
    assert s.lam == expected
    assert s.is_exact


def test_spectral_param_floats_and_offsets():
    g = Geometry(5)
    assert _spectral(5, 0.3).lam == 0.3
    assert not _spectral(5, 0.3).is_exact
    assert isinstance(_spectral(5, "1+2i").lam, complex)
    assert SpectralParam.from_offset(g, -1).lam == 1
    assert SpectralParam.from_offset(g, "1/2").integer_offset is None
    assert _spectral(5, 3).integer_offset == 1
    assert _spectral(4, Fraction(1, 2)).integer_offset == -1


def test_hypergeometric_params():
    params = hypergeometric_params(_spectral(5, 1), 2)
    assert (params.a, params.b, params.c) == (5, -2, 2)


def test_ladder_index_and_casimir():
    s = _spectral(5, 3)
    assert ladder_index(s, 1) is None
    assert ladder_index(s, 2) == 0
    assert ladder_index(s, 5) == 3
    assert ladder_index(_spectral(5, Fraction(5, 2)), 4) is None
    assert casimir_eigenvalue(_spectral(5, 1)) == -3


@pytest.mark.parametrize("t", [-2.0, -0.4, 0.0, 0.7, 3.0])
def test_closed_forms(t):
    s = _spectral(5, 1)
    assert phi_radial(s, 0, t) == pytest.approx(math.cosh(t) ** -3, rel=1e-13)
    assert phi_radial(s, 1, t) == pytest.approx(math.tanh(t) * math.cosh(t) ** -3, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize(
    ("n", "lam", "j"),
    [(5, 1, 2), (5, 3, 3), (4, Fraction(1, 2), 1), (6, Fraction(5, 2), 2), (3, 2, 4)],
)
@pytest.mark.parametrize("t", [-2.0, -0.5, 0.3, 1.5])
def test_closed_form_matches_series(n, lam, j, t):
    assert phi_radial(_spectral(n, lam), j, t) == pytest.approx(
        _phi_reference(n, lam, j, t), rel=1e-10, abs=1e-14
    )


@pytest.mark.parametrize(
    ("n", "lam", "j"),
    [(5, 3, 0), (5, Fraction(5, 2), 1), (4, 0.7, 2), (3, Fraction(7, 4), 0)],
)
@pytest.mark.parametrize("t", [-1.0, -0.2, 0.5, 2.0])
def test_series_outside_discrete_set(n, lam, j, t):
    assert phi_radial(_spectral(n, lam), j, t) == pytest.approx(
        _phi_reference(n, lam, j, t), rel=1e-9
    )


@pytest.mark.parametrize(
    ("n", "lam", "j"),
    [(5, 1, 0), (5, 1, 3), (5, 3, 0), (4, Fraction(5, 2), 2), (6, 0.8, 1), (7, Fraction(1, 3), 2)],
)
@pytest.mark.parametrize("t", np.linspace(-4, 4, 9))
def test_radial_ode_residual(n, lam, j, t):
    s = _spectral(n, lam)
    solution = RadialSolution(s, j)
    assert radial_ode_residual(s, j, solution, t, relative=True) < 1e-8
    assert transformed_ode_residual(s, j, t, relative=True) < 1e-8


@pytest.mark.parametrize(
    ("n", "lam", "branch", "j", "t"),
    [
        # λ = ρ: every term vanishes at t = 0
        (3, 1, Branch.PHI_PLUS, 0, 0.0),
        (5, 2, Branch.PHI_PLUS, 0, 0.0),
        # odd solutions vanish at t = 0
        (5, 1, Branch.PHI_PLUS, 1, 0.0),
        (4, Fraction(5, 2), Branch.PHI_NEG_LAMBDA, 2, 0.0),
        # large terms cancel in the growing tail
        (5, 2, Branch.SECOND_KIND_LOG, 0, 5.5),
        (3, 1, Branch.PHI_REFLECTED, 0, 9.5),
    ],
)
def test_relative_residual_is_scaled_by_the_solution(n, lam, branch, j, t):
    s = _spectral(n, lam)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        solution = RadialSolution(s, j, branch)
        value = solution(t)
        residual = radial_ode_residual(s, j, solution, t)
        relative = radial_ode_residual(s, j, solution, t, relative=True)
    assert relative == pytest.approx(abs(residual) / max(abs(value), 1.0))
    assert relative < 1e-8


def test_radial_ode_residual_by_finite_differences():
    s = _spectral(5, 1)
    residual = radial_ode_residual(s, 1, lambda t: math.tanh(t) / math.cosh(t) ** 3, 0.6, relative=True)
    assert residual < 1e-6


def test_radial_ode_residual_detects_non_solutions():
    s = _spectral(5, 1)
    assert radial_ode_residual(s, 0, math.cosh, 0.6, relative=True) > 1e-3


@pytest.mark.parametrize(("n", "lam", "j"), [(5, 3, 0), (5, 1, 2), (4, 0.7, 1)])
@pytest.mark.parametrize("t", [-1.5, 0.2, 2.5])
def test_reflected_branch(n, lam, j, t):
    s = _spectral(n, lam)
    reflected = RadialSolution(s, j, Branch.PHI_REFLECTED)
    assert reflected(t) == pytest.approx(phi_radial(s, j, -t), rel=1e-13, abs=1e-15)
    assert radial_ode_residual(s, j, reflected, t, relative=True) < 1e-8


@pytest.mark.parametrize("j", [0, 1, 2])
def test_second_solution_even_dimension(j):
    s = _spectral(4, Fraction(5, 2))
    solution = second_solution(s, j)
    assert solution.branch is Branch.PHI_NEG_LAMBDA
    t = 12.0
    normalised = solution(t) * math.cosh(t) ** (float(s.rho) - float(s.lam))
    assert normalised == pytest.approx(1.0, abs=1e-5)
    for t in (-1.0, 0.5, 2.0):
        assert radial_ode_residual(s, j, solution, t, relative=True) < 1e-8


@pytest.mark.parametrize("j", [0, 1, 2])
def test_second_solution_odd_dimension(j):
    s = _spectral(5, 1)
    solution = second_solution(s, j)
    assert solution.branch is Branch.SECOND_KIND_LOG
    for t in (0.5, 1.0, 3.0):
        assert radial_ode_residual(s, j, solution, t, relative=True) < 1e-8
    assert abs(wronskian(RadialSolution(s, j), solution, 1.0)) > 1e-12


def test_second_solution_domain():
    with pytest.raises(DomainError):
        second_solution(_spectral(5, Fraction(5, 2)), 0)
    with pytest.raises(DomainError):
        RadialSolution(_spectral(5, Fraction(5, 2)), 0, Branch.SECOND_KIND_LOG)
    with pytest.raises(DomainError):
        RadialSolution(_spectral(5, 1), -1)


def test_asymptotic_constant():
    estimate, exact = asymptotic_constant_estimate(_spectral(4, 1), 0)
    assert exact == ExactScalar(Fraction(4, 3), -2)
    assert float(exact) == pytest.approx(4 / (3 * np.pi), rel=1e-14)
    assert estimate == pytest.approx(float(exact), rel=1e-5)


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_asymptotic_constant_vanishes_on_discrete_set(j):
    estimate, exact = asymptotic_constant_estimate(_spectral(5, 1), j)
    assert exact.is_zero
    assert abs(estimate) < 1e-5


def test_asymptotic_probe_bound():
    with pytest.raises(DomainError):
        asymptotic_constant_estimate(_spectral(5, 1), 0, t_probe=4.0)


def test_x_of_t():
    assert x_of_t(0.0) == pytest.approx(0.5)
    assert x_of_t(-800.0) == pytest.approx(1.0)
    assert x_of_t(800.0) == 0.0


def test_zonal_harmonic():
    g = Geometry(3)
    assert zonal_harmonic(g, 2, Fraction(1)) == 1
    assert zonal_harmonic(g, 2, Fraction(1, 2)) == Fraction(-1, 8)
    assert zonal_harmonic(Geometry(6), 3, 1.0) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        zonal_harmonic(g, 1, 1.5)


@pytest.mark.parametrize("n", [3, 4, 5, 8])
@pytest.mark.parametrize("j", [0, 1, 3])
def test_zonal_harmonic_is_eigenfunction(n, j):
    harmonic = ZonalHarmonic(Geometry(n), j)
    theta = 1.0
    expected = harmonic.eigenvalue() * harmonic(math.cos(theta))
    assert harmonic.angular_laplacian(theta) == pytest.approx(expected, rel=1e-6, abs=1e-6)


def test_value_helpers_match_evaluators():
    s = _spectral(4, Fraction(5, 2))
    assert second_solution_radial(s, 1, 0.8) == second_solution(s, 1)(0.8)
    assert radial_solution(s, 1, Branch.PHI_REFLECTED)(0.8) == pytest.approx(phi_radial(s, 1, -0.8), rel=1e-13)


def _outside_discrete_set():
    cases = []
    for n in range(3, 9):
        rho = Fraction(n - 1, 2)
        for k in (1, 2, 3):
            cases.extend((n, rho + k, j) for j in range(k + 1))
    return cases


@pytest.mark.parametrize(("n", "lam", "j"), _outside_discrete_set())
def test_second_solution_is_independent(n, lam, j):
    s = _spectral(n, lam)
    with warnings.catch_warnings():
        # b in 1..λ gives the non-logarithmic Frobenius solution
        warnings.simplefilter("ignore", UserWarning)
        phi = RadialSolution(s, j)
        other = second_solution(s, j)
        at_zero = wronskian(phi, other, 0.0)
        at_one = wronskian(phi, other, 1.0)
    assert abs(at_zero) > 1e-8
    # Abel: W(t) cosh^{2ρ} t is constant
    assert at_one * math.cosh(1.0) ** (n - 1) == pytest.approx(at_zero, rel=1e-8)


def test_reflected_branch_reuses_continuation():
    s = _spectral(5, 3)
    forward = RadialSolution(s, 0).derivatives(-1.7)
    hits = _continued.cache_info().hits
    reflected = RadialSolution(s, 0, Branch.PHI_REFLECTED).derivatives(1.7)
    assert _continued.cache_info().hits >= hits + 3
    assert reflected[0] == forward[0]
    assert reflected[1] == -forward[1]
