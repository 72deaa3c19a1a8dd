"""Ladder structure of the eigenspaces.

Exact raising/lowering coefficients of U_λ, the irreducibility criterion,
the numerically integrated complementary family and the equivalence of the
two ladders in the range ``0 < λ < ρ``.
"""

from .coefficients import (
    ConnectivityCertificate,
    LadderCoeffs,
    certify_ladder_identity,
    derive_ladder_coefficients,
    irreducibility_connectivity,
    ladder_coeffs,
    ladder_coeffs_at,
    ladder_residual,
)
from .families import (
    DerivativeFit,
    InitialValueSolution,
    LadderFamily,
    complementary_family,
    fit_derivative_expansion,
    u_lambda_family,
)
from .equivalence import (
    CrossCheck,
    EquivalenceReport,
    default_fit_grid,
    equivalence_invariants,
    fit_residual_refinement,
    fitted_products,
    theorem2_cross_check,
)

__all__ = [
    "ConnectivityCertificate",
    "LadderCoeffs",
    "certify_ladder_identity",
    "derive_ladder_coefficients",
    "irreducibility_connectivity",
    "ladder_coeffs",
    "ladder_coeffs_at",
    "ladder_residual",
    "DerivativeFit",
    "InitialValueSolution",
    "LadderFamily",
    "complementary_family",
    "fit_derivative_expansion",
    "u_lambda_family",
    "CrossCheck",
    "EquivalenceReport",
    "default_fit_grid",
    "equivalence_invariants",
    "fit_residual_refinement",
    "fitted_products",
    "theorem2_cross_check",
]
