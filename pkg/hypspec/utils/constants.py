"""Constants."""

# Gauss series
DEFAULT_SERIES_TOL = 1e-12
SERIES_ITERATION_CAP = 100_000

# Precision (decimal digits) of the mpmath continuation of 2F1 on (1/2, 1)
CONTINUATION_DPS = 40
CONTINUATION_CACHE_SIZE = 16_384

# scipy.special.gamma overflows a double just above 171
GAMMA_OVERFLOW_THRESHOLD = 170.0

# 5-point stencil step
DEFAULT_FD_STEP = 1e-3

# Frobenius second solution
DEFAULT_FROBENIUS_ORDER = 60
FROBENIUS_ORDER_CAP = 4000
FROBENIUS_TAIL_TARGET = 1e-20

# Asymptotics and quadrature
MIN_ASYMPTOTIC_PROBE = 8.0
DEFAULT_ASYMPTOTIC_PROBE = 12.0
DEFAULT_TRUNCATION = 25.0
TRUNCATION_COMPARISON_OFFSET = 5.0
QUADRATURE_EPSREL = 1e-11
# growth-rate studies of divergent integrals
DIVERGENCE_EPSREL = 1e-8
QUADRATURE_LIMIT = 400
CONVERGENCE_REL_CHANGE = 1e-6
DIVERGENCE_RATE_SLACK = 0.2

# Ladder fits and the ODE stepper of the complementary family
FIT_CONDITION_CAP = 1e10
MIN_FIT_POINTS = 20
ODE_RTOL = 1e-12
ODE_ATOL = 1e-14
DEFAULT_FIT_GRID = (0.25, 4.0, 40)

# Verification tolerances (cli --tol-<name>)
DEFAULT_TOLERANCES = {
    "series_tol": 1e-12,
    "ode_tol": 1e-8,
    "asym_tol": 1e-5,
    "fit_tol": 1e-8,
    "parity_tol": 1e-10,
    "norm_tol": 1e-6,
    "equiv_tol": 1e-6,
}

# Default sweep
DEFAULT_N_RANGE = (3, 8)
MAX_N_RANGE = (3, 12)
DEFAULT_MAX_OFFSET = 6
DEFAULT_FRACTIONAL_OFFSETS = ("1/3", "1/2", "7/4")
DEFAULT_J_MAX = 8
DEFAULT_GRID = (-10.0, 10.0, 41)

# Report schema
REPORT_SCHEMA_VERSION = "1"

# Set the default compression level based on
# optimal performance and compression ratio
DEFAULT_NETCDF_COMPLEVEL = 4
