"""The discrete K-type set D_λ and the parity of U_λ."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import count, islice
from typing import Iterator

from ..eigen.geometry import SpectralParam
from ..eigen.radial import ladder_index
from ...utils.errors import DomainError


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"

    @classmethod
    def of_sign(cls, sign: int) -> Parity:
        return cls.EVEN if sign > 0 else cls.ODD

    @property
    def sign(self) -> int:
        if self is Parity.NONE:
            raise ValueError("Parity.NONE has no sign")
        return 1 if self is Parity.EVEN else -1


@dataclass(frozen=True)
class DiscreteKTypeSet:
    """``D_λ = N_0 ∩ (λ-ρ+N)``: empty, or ``{j_min, j_min+1, ...}``."""

    spectral: SpectralParam
    empty: bool
    j_min: int | None

    def __contains__(self, j: int) -> bool:
        return not self.empty and j >= self.j_min

    def __iter__(self) -> Iterator[int]:
        if self.empty:
            return iter(())
        return count(self.j_min)

    def head(self, size: int) -> list[int]:
        """The first ``size`` K-types."""
        return list(islice(self, size))

    def up_to(self, j_max: int) -> list[int]:
        """``D_λ ∩ [0, j_max]``."""
        if self.empty:
            return []
        return list(range(self.j_min, j_max + 1))

    @property
    def is_everything(self) -> bool:
        """True when ``D_λ = N_0``."""
        return not self.empty and self.j_min == 0


def discrete_ktype_set(s: SpectralParam) -> DiscreteKTypeSet:
    """Compute D_λ exactly.

    Nonempty iff ``λ - ρ`` is an integer and ``λ > 0``, with
    ``j_min = max(0, λ-ρ+1)``.
    """
    if s.real < 0:
        raise DomainError(f"discrete_ktype_set needs Re λ >= 0, got λ = {s.lam}")
    k = s.integer_offset
    if k is None or not s.lam > 0:
        return DiscreteKTypeSet(s, True, None)
    return DiscreteKTypeSet(s, False, max(0, k + 1))


def parity_of_U(s: SpectralParam) -> Parity:
    """Global parity of U_λ: even when ``λ-ρ`` is odd, odd when it is even, NONE if D_λ is empty."""
    if discrete_ktype_set(s).empty:
        return Parity.NONE
    return Parity.EVEN if s.integer_offset % 2 else Parity.ODD


def radial_parity(s: SpectralParam, j: int) -> Parity:
    """Parity ``(-1)^l`` of φ_{λ,j} in t for ``j = λ-ρ+1+l``; NONE otherwise."""
    l = ladder_index(s, j)
    if l is None:
        return Parity.NONE
    return Parity.of_sign((-1) ** l)
