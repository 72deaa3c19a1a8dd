"""Radial eigenfunctions of the Laplace-Beltrami operator on the hyperboloid.

Coordinates and spectral parameter, the solutions φ_{λ,j} with their
reflections and second solutions, residuals of the radial equation, and the
zonal spherical harmonic factor.
"""

from .geometry import Branch, Geometry, SpectralParam
from .radial import (
    RadialSolution,
    asymptotic_constant_estimate,
    casimir_eigenvalue,
    hypergeometric_params,
    ladder_index,
    phi_radial,
    radial_solution,
    second_solution,
    second_solution_radial,
    x_of_t,
)
from .ode import (
    finite_differences,
    radial_ode_residual,
    transformed_ode_residual,
    wronskian,
)
from .zonal import ZonalHarmonic, zonal_harmonic

__all__ = [
    "Branch",
    "Geometry",
    "SpectralParam",
    "RadialSolution",
    "asymptotic_constant_estimate",
    "casimir_eigenvalue",
    "hypergeometric_params",
    "ladder_index",
    "phi_radial",
    "radial_solution",
    "second_solution",
    "second_solution_radial",
    "x_of_t",
    "finite_differences",
    "radial_ode_residual",
    "transformed_ode_residual",
    "wronskian",
    "ZonalHarmonic",
    "zonal_harmonic",
]
