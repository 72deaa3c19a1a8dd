"""Discrete series verdicts for the even and odd eigenspaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .ktypes import Parity, discrete_ktype_set, parity_of_U
from ..eigen.geometry import Geometry, SpectralParam
from ...utils.errors import DomainError


@dataclass(frozen=True)
class TheoremVerdict:
    """Classification of ``E_λ^even`` and ``E_λ^odd``.

    ``<parity>_in_L2`` and ``<parity>_tempered`` refer to the whole K-finite
    eigenspace of that parity. ``multiplicity_full`` is None where it is not
    determined.
    """

    even_discrete: bool
    odd_discrete: bool
    even_in_L2: bool
    odd_in_L2: bool
    even_tempered: bool
    odd_tempered: bool
    multiplicity_full: int | None
    multiplicity_temp: int

    @property
    def discrete_parity(self) -> Parity:
        if self.even_discrete:
            return Parity.EVEN
        if self.odd_discrete:
            return Parity.ODD
        return Parity.NONE


def _spectral(g: Geometry, lam: Any) -> SpectralParam:
    if isinstance(lam, SpectralParam):
        if lam.geometry != g:
            raise DomainError(f"λ belongs to n = {lam.geometry.n}, not n = {g.n}")
        return lam
    return SpectralParam(g, lam)


def in_theorem2_regime(s: SpectralParam) -> bool:
    """``λ ∈ ρ - N`` and ``0 < λ < ρ``."""
    k = s.integer_offset
    return k is not None and k <= -1 and s.lam > 0


def classify_theorem1(g: Geometry, lam: Any) -> TheoremVerdict:
    """Which parity carries a discrete series for λ.

    ``E_λ^even`` is discrete iff ``λ ∈ ρ+1+2Z``, ``E_λ^odd`` iff ``λ ∈ ρ+2Z``.

    Raises
    ------
    DomainError
        If ``Re λ <= 0``.
    """
    s = _spectral(g, lam)
    s.require_positive("classify_theorem1")
    parity = parity_of_U(s)
    whole = discrete_ktype_set(s).is_everything

    even = parity is Parity.EVEN
    odd = parity is Parity.ODD
    if in_theorem2_regime(s):
        full = 2
    elif parity is Parity.NONE:
        full = 0
    else:
        full = None
    return TheoremVerdict(
        even_discrete=even,
        odd_discrete=odd,
        even_in_L2=even and whole,
        odd_in_L2=odd and whole,
        even_tempered=even and whole,
        odd_tempered=odd and whole,
        multiplicity_full=full,
        multiplicity_temp=0 if parity is Parity.NONE else 1,
    )


def classify_theorem2(g: Geometry, lam: Any) -> TheoremVerdict | None:
    """Verdict in the range ``0 < λ < ρ``, ``λ ∈ ρ - N``; None outside it.

    If ``λ - ρ`` is even the odd eigenspace lies in L² and the even one is
    not tempered, and the other way round when ``λ - ρ`` is odd. The
    representation occurs twice in C^∞ and once among tempered functions.
    """
    s = _spectral(g, lam)
    if not in_theorem2_regime(s):
        return None
    odd_side = s.integer_offset % 2 == 0
    return TheoremVerdict(
        even_discrete=not odd_side,
        odd_discrete=odd_side,
        even_in_L2=not odd_side,
        odd_in_L2=odd_side,
        even_tempered=not odd_side,
        odd_tempered=odd_side,
        multiplicity_full=2,
        multiplicity_temp=1,
    )
