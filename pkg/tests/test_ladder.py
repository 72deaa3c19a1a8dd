from fractions import Fraction

import numpy as np
import pytest
import sympy

from hypspec.core.eigen import Geometry, SpectralParam, radial_ode_residual
from hypspec.core.ladder import (
    certify_ladder_identity,
    complementary_family,
    default_fit_grid,
    derive_ladder_coefficients,
    equivalence_invariants,
    fit_derivative_expansion,
    fit_residual_refinement,
    fitted_products,
    irreducibility_connectivity,
    ladder_coeffs,
    ladder_coeffs_at,
    ladder_residual,
    theorem2_cross_check,
    u_lambda_family,
)
from hypspec.core.ladder.coefficients import LAMBDA, L, RHO
from hypspec.core.spectrum import Parity
from hypspec.utils.errors import DomainError


def _spectral(n, lam):
    return SpectralParam(Geometry(n), lam)


def test_ladder_coefficients_first_step():
    coeffs = ladder_coeffs(_spectral(5, 1), 1)
    assert (coeffs.A, coeffs.B) == (Fraction(-16, 5), Fraction(1, 5))


@pytest.mark.parametrize(("n", "lam"), [(5, 1), (5, 3), (4, Fraction(5, 2)), (4, Fraction(1, 2))])
def test_ladder_bottom(n, lam):
    s = _spectral(n, lam)
    coeffs = ladder_coeffs(s, 0)
    assert coeffs.A == -(s.lam + s.rho)
    assert coeffs.B == 0


def test_ladder_coeffs_domain():
    with pytest.raises(DomainError):
        ladder_coeffs(_spectral(5, Fraction(5, 2)), 0)
    with pytest.raises(DomainError):
        ladder_coeffs(_spectral(5, 1), -1)
    with pytest.raises(DomainError):
        ladder_coeffs_at(_spectral(5, 3), 1)


@pytest.mark.parametrize(
    ("n", "lam"),
    [
        (5, 1), (5, 3), (3, 2), (4, Fraction(1, 2)), (6, Fraction(3, 2)),
        (7, 2), (8, Fraction(9, 2)), (7, 1), (8, Fraction(1, 2)),
    ],
)
@pytest.mark.parametrize("offset", [0, 1, 2, 5])
def test_certify_ladder_identity(n, lam, offset):
    s = _spectral(n, lam)
    k = s.integer_offset
    l = max(0, -(k + 1)) + offset
    assert certify_ladder_identity(s, l)


def test_derive_ladder_coefficients():
    a, b = derive_ladder_coefficients()
    expected_a = -(LAMBDA + RHO + L) * (2 * LAMBDA + L + 1) / (2 * LAMBDA + 2 * L + 1)
    expected_b = L * (LAMBDA - RHO + L + 1) / (2 * LAMBDA + 2 * L + 1)
    assert sympy.simplify(a - expected_a) == 0
    assert sympy.simplify(b - expected_b) == 0


@pytest.mark.parametrize(("n", "lam", "j"), [(5, 1, 0), (5, 1, 1), (5, 3, 3), (4, Fraction(5, 2), 2)])
def test_ladder_residual(n, lam, j):
    assert ladder_residual(_spectral(n, lam), j, np.linspace(-5, 5, 21)) < 1e-10


def test_ladder_residual_empty_grid():
    with pytest.raises(DomainError):
        ladder_residual(_spectral(5, 1), 1, [])


@pytest.mark.parametrize(
    ("lam", "nodes", "zero_lowering"),
    [(1, [0, 1, 2, 3, 4, 5, 6], [0]), (3, [2, 3, 4, 5, 6], [2]), (Fraction(5, 2), [], [])],
)
def test_irreducibility_connectivity(lam, nodes, zero_lowering):
    connected, certificate = irreducibility_connectivity(Geometry(5), lam, 6)
    assert connected
    assert certificate.nodes == nodes
    assert certificate.zero_lowering == zero_lowering
    if nodes:
        assert (nodes[-1], nodes[-1] + 1) not in certificate.raising
        assert len(certificate.lowering) == len(nodes) - 1


def test_connectivity_below_rho():
    # n = 8, λ = 1/2: λ - ρ = -3, the bottom l = 2 has B = 0
    connected, certificate = irreducibility_connectivity(Geometry(8), Fraction(1, 2), 5)
    assert connected
    assert certificate.zero_lowering == [0]


def test_u_lambda_family():
    family = u_lambda_family(_spectral(5, 3), 4)
    assert family.j_range == (2, 5)
    assert family.parity is Parity.EVEN
    with pytest.raises(DomainError):
        u_lambda_family(_spectral(5, Fraction(5, 2)), 4)


def test_u_lambda_fit_recovers_exact_coefficients():
    s = _spectral(5, 1)
    family = u_lambda_family(s, 4)
    grid = default_fit_grid()
    bottom = fit_derivative_expansion(family, 0, grid)
    assert bottom.b is None
    assert bottom.a == pytest.approx(-3.0, rel=1e-10)
    fit = fit_derivative_expansion(family, 1, grid)
    assert fit.a == pytest.approx(-16 / 5, rel=1e-8)
    assert fit.b == pytest.approx(1 / 5, rel=1e-8)
    assert fit.fit_residual < 1e-10


def test_complementary_family_parity():
    s = _spectral(5, 1)
    family = complementary_family(s, 3)
    assert family.parity is Parity.ODD
    assert family.j_range == (0, 4)
    # j = 0 is odd in t, j = 1 even
    assert family.basis[0](0.0) == pytest.approx(0.0, abs=1e-14)
    assert family.basis[0].derivatives(0.0)[1] == pytest.approx(1.0)
    assert family.basis[1](0.0) == pytest.approx(1.0)
    assert family.basis[1](-1.3) == pytest.approx(family.basis[1](1.3))
    assert family.basis[2](-0.8) == pytest.approx(-family.basis[2](0.8))


@pytest.mark.parametrize("j", [0, 1, 2])
@pytest.mark.parametrize("t", [-2.0, 0.5, 3.0])
def test_complementary_family_solves_radial_equation(j, t):
    s = _spectral(5, 1)
    family = complementary_family(s, 2)
    assert radial_ode_residual(s, j, family.basis[j], t, relative=True) < 1e-8


def test_complementary_family_domain():
    with pytest.raises(DomainError):
        complementary_family(_spectral(5, 3), 3)


def test_fitted_products_are_invariant_under_rescaling():
    family = complementary_family(_spectral(5, 1), 3)
    products, _ = fitted_products(family, 3)
    rescaled = family.rescaled({0: 2.5, 1: -0.3, 2: 7.0, 3: 0.1, 4: 4.0})
    rescaled_products, _ = fitted_products(rescaled, 3)
    np.testing.assert_allclose(rescaled_products, products, rtol=1e-8)


def test_equivalence_invariants_first_product():
    report = equivalence_invariants(Geometry(5), 1, 4)
    assert report.products_exact[0] == Fraction(-3, 5)
    assert len(report.products_fitted) == 4


@pytest.mark.parametrize(("n", "lam"), [(5, 1), (7, 1), (7, 2)])
def test_equivalence_invariants(n, lam):
    report = equivalence_invariants(Geometry(n), lam, 8)
    assert len(report.products_fitted) == 8
    assert report.max_rel_deviation < 1e-8
    assert report.casimir_match
    assert max(report.fit_residuals) < 1e-8


def test_equivalence_invariants_domain():
    with pytest.raises(DomainError):
        equivalence_invariants(Geometry(5), 3, 4)
    with pytest.raises(DomainError):
        equivalence_invariants(Geometry(5), 1, 0)


def test_fit_residual_refinement():
    residuals = fit_residual_refinement(_spectral(5, 1), 1)
    assert len(residuals) == 3
    assert residuals[-1] <= residuals[0]
    assert residuals[-1] < 1e-8


def test_theorem2_cross_check():
    check = theorem2_cross_check(Geometry(5), 1)
    assert check.threshold == 4
    assert check.p == pytest.approx(3.0)
    assert check.l2_parity is Parity.EVEN
    assert check.passed


def test_theorem2_cross_check_outside_range():
    assert theorem2_cross_check(Geometry(5), 3) is None
    with pytest.raises(DomainError):
        theorem2_cross_check(Geometry(5), 1, eps=2.0)
