"""Top-level package for hypspec."""

from .core.specfun import (
    ExactScalar,
    GammaFlag,
    HypergeometricParams,
    gamma_exact,
    gamma_float,
    gauss_limit_constant,
    hyp2f1,
    jacobi_coefficients,
    jacobi_poly,
    frobenius_second_solution,
    pochhammer,
)
from .core.eigen import (
    Branch,
    Geometry,
    SpectralParam,
    RadialSolution,
    phi_radial,
    radial_solution,
    radial_ode_residual,
    second_solution_radial,
    asymptotic_constant_estimate,
    wronskian,
    zonal_harmonic,
)
from .core.spectrum import (
    Parity,
    discrete_ktype_set,
    parity_of_U,
    classify_theorem1,
    classify_theorem2,
    lp_membership_analytic,
    weighted_lp_norm,
)
from .core.ladder import (
    ladder_coeffs,
    ladder_residual,
    certify_ladder_identity,
    irreducibility_connectivity,
    complementary_family,
    u_lambda_family,
    fit_derivative_expansion,
    equivalence_invariants,
    theorem2_cross_check,
)
from .profiles import (
    make_profile_dataset,
    write_profile_nc,
    read_profile_nc,
)
from .utils.errors import (
    HypspecError,
    DomainError,
    ConvergenceError,
    IllConditionedError,
    UsageError,
)


__version__ = "0.1.0"


__all__ = [
    name for name in globals()
    if not name.startswith("_")
]
