"""Discrete series classification.

The discrete K-type set D_λ, the parity of U_λ, the even/odd verdicts and
analytic and quadrature-based L^p membership.
"""

from .ktypes import (
    DiscreteKTypeSet,
    Parity,
    discrete_ktype_set,
    parity_of_U,
    radial_parity,
)
from .theorems import (
    TheoremVerdict,
    classify_theorem1,
    classify_theorem2,
    in_theorem2_regime,
)
from .norms import (
    MembershipVerdict,
    NormDiagnostic,
    growth_exponents,
    lp_membership_analytic,
    lp_quadrature,
    membership_agrees,
    weighted_lp_norm,
)

__all__ = [
    "DiscreteKTypeSet",
    "Parity",
    "discrete_ktype_set",
    "parity_of_U",
    "radial_parity",
    "TheoremVerdict",
    "classify_theorem1",
    "classify_theorem2",
    "in_theorem2_regime",
    "MembershipVerdict",
    "NormDiagnostic",
    "growth_exponents",
    "lp_membership_analytic",
    "lp_quadrature",
    "membership_agrees",
    "weighted_lp_norm",
]
