"""Special functions.

Pochhammer symbols, exact and floating Gamma, the Gauss hypergeometric
function with its limit constant at x = 1, equal-index Jacobi polynomials and
the logarithmic Frobenius solution at integer c.
"""

from .exact import (
    ExactScalar,
    as_fraction,
    from_sympy,
    is_integer_value,
    is_nonpositive_integer,
    is_rational,
    to_sympy,
)
from .gamma import GammaFlag, gamma_exact, gamma_float, pochhammer
from .hypergeometric import (
    HypergeometricParams,
    SeriesValue,
    gauss_limit_constant,
    hyp2f1,
    hyp2f1_complement,
    hyp2f1_derivatives,
    is_terminating,
)
from .jacobi import jacobi_coefficients, jacobi_derivative, jacobi_poly
from .frobenius import (
    FrobeniusSolution,
    frobenius_second_solution,
    hypergeometric_ode_residual,
)

__all__ = [
    "ExactScalar",
    "as_fraction",
    "from_sympy",
    "is_integer_value",
    "is_nonpositive_integer",
    "is_rational",
    "to_sympy",
    "GammaFlag",
    "gamma_exact",
    "gamma_float",
    "pochhammer",
    "HypergeometricParams",
    "SeriesValue",
    "gauss_limit_constant",
    "hyp2f1",
    "hyp2f1_complement",
    "hyp2f1_derivatives",
    "is_terminating",
    "jacobi_coefficients",
    "jacobi_derivative",
    "jacobi_poly",
    "FrobeniusSolution",
    "frobenius_second_solution",
    "hypergeometric_ode_residual",
]
