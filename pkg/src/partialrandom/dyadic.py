"""Exact non-negative dyadic rationals ``mantissa * 2**exponent``."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering


@total_ordering
class Dyadic:
    """Non-negative value ``mantissa * 2**exponent`` kept in canonical form.

    The mantissa is odd (or zero, in which case the exponent is 0), so
    structural equality is value equality.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int = 0, exponent: int = 0):
        if mantissa < 0:
            raise ValueError("Dyadic values are non-negative")
        if mantissa == 0:
            exponent = 0
        else:
            tz = (mantissa & -mantissa).bit_length() - 1
            mantissa >>= tz
            exponent += tz
        self.mantissa = mantissa
        self.exponent = exponent

    @classmethod
    def pow2(cls, e: int | float) -> Dyadic:
        """``2**e``; ``e = -inf`` gives 0 (used for ``2**-norm(empty)``)."""
        if e == -math.inf:
            return ZERO
        if e == math.inf:
            raise OverflowError("2**inf is not a dyadic")
        return cls(1, int(e))

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> Dyadic:
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, -(den.bit_length() - 1))

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __float__(self) -> float:
        return math.ldexp(self.mantissa, self.exponent)

    def _align(self, other: Dyadic) -> tuple[int, int, int]:
        e = min(self.exponent, other.exponent)
        return (self.mantissa << (self.exponent - e),
                other.mantissa << (other.exponent - e), e)

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        if self.mantissa == 0:
            return other
        if other.mantissa == 0:
            return self
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def scale2(self, k: int) -> Dyadic:
        """Multiply by ``2**k``."""
        if self.mantissa == 0:
            return self
        return Dyadic(self.mantissa, self.exponent + k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Dyadic(other) if other >= 0 else None
            if other is None:
                return False
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, int):
            if other < 0:
                return False
            other = Dyadic(other)
        if isinstance(other, Fraction):
            return self.to_fraction() < other
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, _ = self._align(other)
        return a < b

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def floor_log2(self) -> int:
        """Largest ``k`` with ``2**k <= self``; requires a positive value."""
        if self.mantissa == 0:
            raise ValueError("log of zero")
        return self.exponent + self.mantissa.bit_length() - 1

    def max_exponent_below(self) -> int | float:
        """Largest integer ``e`` with ``self <= 2**-e`` (``inf`` for zero)."""
        if self.mantissa == 0:
            return math.inf
        k = self.floor_log2()
        # 2**k <= self < 2**(k+1); self <= 2**k only when self is a power of two
        return -k if self.mantissa == 1 else -(k + 1)

    def __str__(self) -> str:
        return f"{self.mantissa}*2^{self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.mantissa}, {self.exponent})"


ZERO = Dyadic(0)
ONE = Dyadic(1)


def dsum(values) -> Dyadic:
    total = ZERO
    for v in values:
        total = total + v
    return total


def parse_dyadic(text: str) -> Dyadic:
    """Inverse of ``str(Dyadic)``: ``"a*2^e"``."""
    a, _, e = text.partition("*2^")
    return Dyadic(int(a), int(e or 0))
