import math
from fractions import Fraction

import pytest

from hypspec.core.eigen import Branch, Geometry, SpectralParam
from hypspec.core.spectrum import (
    Parity,
    classify_theorem1,
    classify_theorem2,
    discrete_ktype_set,
    growth_exponents,
    in_theorem2_regime,
    lp_membership_analytic,
    membership_agrees,
    parity_of_U,
    radial_parity,
    weighted_lp_norm,
)
from hypspec.utils.errors import DomainError


def _spectral(n, lam):
    return SpectralParam(Geometry(n), lam)


@pytest.mark.parametrize(
    ("n", "lam", "head"),
    [
        (5, 1, [0, 1, 2]),
        (5, 2, [1, 2, 3]),
        (5, 3, [2, 3, 4]),
        (5, Fraction(5, 2), []),
        (5, 0.7, []),
        (4, Fraction(5, 2), [2, 3, 4]),
        (8, Fraction(1, 2), [0, 1, 2]),
    ],
)
def test_discrete_ktype_set(n, lam, head):
    d_lambda = discrete_ktype_set(_spectral(n, lam))
    assert d_lambda.head(3) == head
    assert d_lambda.empty == (not head)


def test_discrete_ktype_set_membership():
    d_lambda = discrete_ktype_set(_spectral(5, 3))
    assert 1 not in d_lambda
    assert 2 in d_lambda and 40 in d_lambda
    assert d_lambda.up_to(4) == [2, 3, 4]
    assert not d_lambda.is_everything
    assert discrete_ktype_set(_spectral(5, 1)).is_everything
    with pytest.raises(DomainError):
        discrete_ktype_set(_spectral(5, -1))



def _discrete_cells():
    cells = []
    for n in range(3, 9):
        rho = Fraction(n - 1, 2)
        cells.extend((n, rho + k) for k in range(int(-rho) + 1, 7) if rho + k > 0)
    return cells


@pytest.mark.parametrize(("n", "lam"), _discrete_cells())
def test_global_parity_matches_radial_parity(n, lam):
    s = _spectral(n, lam)
    global_parity = parity_of_U(s)
    for j in discrete_ktype_set(s).up_to(8):
        assert global_parity.sign == radial_parity(s, j).sign * (-1) ** j


@pytest.mark.parametrize(
    ("lam", "parity"),
    [(1, Parity.EVEN), (2, Parity.ODD), (3, Parity.EVEN), (4, Parity.ODD), (Fraction(5, 2), Parity.NONE)],
)
def test_parity_of_U(lam, parity):
    assert parity_of_U(_spectral(5, lam)) is parity


def test_radial_parity():
    s = _spectral(5, 3)
    assert radial_parity(s, 2) is Parity.EVEN
    assert radial_parity(s, 3) is Parity.ODD
    assert radial_parity(s, 1) is Parity.NONE


@pytest.mark.parametrize(
    ("n", "lam", "even", "odd"),
    [
        (5, 2, False, True),
        (5, 3, True, False),
        (5, Fraction(5, 2), False, False),
        (4, Fraction(5, 2), True, False),
        (4, Fraction(7, 2), False, True),
        (6, 0.9, False, False),
    ],
)
def test_classify_theorem1(n, lam, even, odd):
    verdict = classify_theorem1(Geometry(n), lam)
    assert (verdict.even_discrete, verdict.odd_discrete) == (even, odd)
    assert not (verdict.even_discrete and verdict.odd_discrete)


def test_classify_theorem1_multiplicities():
    g = Geometry(5)
    assert classify_theorem1(g, Fraction(5, 2)).multiplicity_full == 0
    assert classify_theorem1(g, Fraction(5, 2)).multiplicity_temp == 0
    assert classify_theorem1(g, 3).multiplicity_full is None
    assert classify_theorem1(g, 3).multiplicity_temp == 1
    assert classify_theorem1(g, 1).multiplicity_full == 2
    assert classify_theorem1(g, 1).discrete_parity is Parity.EVEN


def test_classify_theorem1_needs_positive_lambda():
    with pytest.raises(DomainError):
        classify_theorem1(Geometry(5), 0)
    with pytest.raises(DomainError):
        classify_theorem1(Geometry(5), -3)


def test_classify_theorem2():
    # λ - ρ = -1 is odd: the even eigenspace is square-integrable
    verdict = classify_theorem2(Geometry(5), 1)
    assert verdict.even_in_L2 and not verdict.odd_in_L2
    assert not verdict.odd_tempered
    assert (verdict.multiplicity_full, verdict.multiplicity_temp) == (2, 1)

    # λ - ρ = -2 is even
    verdict = classify_theorem2(Geometry(7), 1)
    assert verdict.odd_in_L2 and not verdict.even_in_L2
    assert verdict.discrete_parity is Parity.ODD
    assert verdict.discrete_parity is parity_of_U(_spectral(7, 1))

    assert classify_theorem2(Geometry(5), 3) is None
    assert classify_theorem2(Geometry(5), Fraction(3, 2)) is None


def test_in_theorem2_regime():
    assert in_theorem2_regime(_spectral(5, 1))
    assert in_theorem2_regime(_spectral(6, Fraction(1, 2)))
    assert not in_theorem2_regime(_spectral(5, 2))
    assert not in_theorem2_regime(_spectral(5, 0.5))


def test_growth_exponents():
    s = _spectral(5, 3)
    assert growth_exponents(s, 0, Branch.PHI_PLUS) == (1, -5)
    assert growth_exponents(s, 0, Branch.PHI_REFLECTED) == (-5, 1)
    assert growth_exponents(s, 2, Branch.PHI_PLUS) == (-5, -5)


def test_lp_membership_of_discrete_solutions():
    verdict = lp_membership_analytic(_spectral(5, 1), 0, Branch.PHI_PLUS)
    assert verdict.in_L2 and verdict.tempered
    assert verdict.lp_threshold is None
    assert verdict.parity_class is Parity.EVEN


def test_lp_membership_outside_discrete_set():
    verdict = lp_membership_analytic(_spectral(5, 3), 0, Branch.PHI_PLUS)
    assert not verdict.in_L2 and not verdict.tempered
    assert verdict.lp_threshold is None
    assert verdict.parity_class is Parity.NONE


@pytest.mark.parametrize(
    ("n", "lam", "branch", "threshold"),
    [
        (5, 1, Branch.SECOND_KIND_LOG, Fraction(4)),
        (7, 1, Branch.SECOND_KIND_LOG, Fraction(3)),
        (4, Fraction(1, 2), Branch.PHI_NEG_LAMBDA, Fraction(3)),
        (6, Fraction(1, 2), Branch.PHI_NEG_LAMBDA, Fraction(5, 2)),
    ],
)
def test_second_solution_lp_threshold(n, lam, branch, threshold):
    s = _spectral(n, lam)
    verdict = lp_membership_analytic(s, 0, branch)
    assert not verdict.in_L2 and not verdict.tempered
    assert verdict.lp_threshold == threshold
    assert verdict.lp_threshold == 2 * s.rho / (s.rho - s.lam)


def test_closed_form_norm():
    # n = 5, λ = 1, j = 0: ∫ sech²t dt = 2
    value, diagnostic = weighted_lp_norm(_spectral(5, 1), 0)
    assert value == pytest.approx(2.0, rel=1e-9)
    assert diagnostic.converging
    assert diagnostic.rate_consistent is None


def test_norm_tail_beyond_truncation():
    # ∫_{|t|>T} sech²t dt = 2(1 - tanh T)
    _, diagnostic = weighted_lp_norm(_spectral(5, 1), 0, truncation=6.0, offset=2.0)
    assert diagnostic.tail == pytest.approx(2 * (1 - math.tanh(6.0)), rel=1e-4)
    assert diagnostic.value == pytest.approx(2.0, rel=1e-9)
    assert abs(diagnostic.value - diagnostic.tail - 2.0) > 1e-6


def test_divergent_norm_rate():
    s = _spectral(5, 3)
    _, diagnostic = weighted_lp_norm(s, 0)
    assert not diagnostic.converging
    assert diagnostic.predicted_rate == pytest.approx(6.0)
    assert diagnostic.measured_rate == pytest.approx(6.0, rel=0.2)
    assert diagnostic.rate_consistent
    assert membership_agrees(lp_membership_analytic(s, 0, Branch.PHI_PLUS), diagnostic, 2.0)
    assert diagnostic.tail == 0.0


def test_second_solution_norm_below_threshold_diverges():
    s = _spectral(5, 1)
    _, diagnostic = weighted_lp_norm(s, 0, Branch.SECOND_KIND_LOG, p=3.0)
    assert not diagnostic.converging
    verdict = lp_membership_analytic(s, 0, Branch.SECOND_KIND_LOG)
    assert membership_agrees(verdict, diagnostic, 3.0)


def test_second_solution_norm_above_threshold_converges():
    s = _spectral(5, 1)
    _, diagnostic = weighted_lp_norm(s, 0, Branch.SECOND_KIND_LOG, p=6.0)
    assert diagnostic.converging
    verdict = lp_membership_analytic(s, 0, Branch.SECOND_KIND_LOG)
    assert membership_agrees(verdict, diagnostic, 6.0)


def test_weighted_lp_norm_domain():
    with pytest.raises(DomainError):
        weighted_lp_norm(_spectral(5, 1), 0, p=0.5)
