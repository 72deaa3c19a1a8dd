"""Exact scalars: rationals and rational multiples of powers of sqrt(pi)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any

import sympy


def is_rational(value: Any) -> bool:
    """True for ints and Fractions (bools excluded)."""
    return isinstance(value, Rational) and not isinstance(value, bool)


def as_fraction(value: Any) -> Fraction:
    """Convert an exact rational (int, Fraction, "p/q" string) to a Fraction."""
    if isinstance(value, str):
        return Fraction(value.strip())
    if is_rational(value):
        return Fraction(value)
    raise TypeError(f"Not an exact rational: {value!r}")


def is_integer_value(value: Any) -> bool:
    """True when ``value`` is an exact rational with denominator 1."""
    return is_rational(value) and Fraction(value).denominator == 1


def is_nonpositive_integer(value: Any) -> bool:
    """True when ``value`` lies in -N_0 (exactly, or as a float/complex with no fractional part)."""
    if is_rational(value):
        return Fraction(value).denominator == 1 and value <= 0
    value = complex(value)
    return value.imag == 0 and value.real <= 0 and float(value.real).is_integer()


def to_sympy(value: Any) -> sympy.Expr:
    """Exact rational to a sympy Rational; floats pass through sympy.Float."""
    if is_rational(value):
        q = Fraction(value)
        return sympy.Rational(q.numerator, q.denominator)
    return sympy.sympify(value)


def from_sympy(value: sympy.Expr) -> Fraction:
    """sympy Rational (or Integer) back to a Fraction."""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class ExactScalar:
    """The exact number ``q * pi**(sqrt_pi_power / 2)``.

    Γ at integers and half-odd-integers lands in this set; products and
    quotients of such values stay in it, with the powers of sqrt(pi) adding.
    Zero is normalised to ``sqrt_pi_power == 0``.
    """

    q: Fraction
    sqrt_pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0:
            object.__setattr__(self, "sqrt_pi_power", 0)

    @classmethod
    def rational(cls, value: Any) -> ExactScalar:
        return cls(as_fraction(value), 0)

    @property
    def is_zero(self) -> bool:
        return self.q == 0

    @property
    def is_rational(self) -> bool:
        return self.sqrt_pi_power == 0

    def __mul__(self, other: Any) -> ExactScalar:
        if is_rational(other):
            other = ExactScalar.rational(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self.q * other.q, self.sqrt_pi_power + other.sqrt_pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> ExactScalar:
        if is_rational(other):
            other = ExactScalar.rational(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("ExactScalar division by zero")
        return ExactScalar(self.q / other.q, self.sqrt_pi_power - other.sqrt_pi_power)

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.q, self.sqrt_pi_power)

    def __float__(self) -> float:
        return float(self.q) * math.pi ** (self.sqrt_pi_power / 2)

    def __complex__(self) -> complex:
        return complex(float(self))

    def to_sympy(self) -> sympy.Expr:
        return to_sympy(self.q) * sympy.pi ** sympy.Rational(self.sqrt_pi_power, 2)

    def __str__(self) -> str:
        if self.sqrt_pi_power == 0:
            return str(self.q)
        return f"{self.q}*pi^({self.sqrt_pi_power}/2)"
