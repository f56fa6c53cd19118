"""Exact scalar types layered over ``fractions.Fraction``.

Three scalar rings are used throughout the package:

* plain rationals (``Fraction`` itself, no wrapper),
* ``DualNumber``: first-order jets a + eps*b with eps**2 = 0,
* ``QuadExt``: one square-root extension a + b*sqrt(m) of the rationals.

All arithmetic is exact.  Coercion from ``int`` and ``Fraction`` is accepted
on either side of an operator; anything else is refused so that mistakes
surface as ``TypeError`` instead of silent float contagion.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class RationalityError(ArithmeticError):
    """A value that must be rational has a surviving irrational part."""


class MixedRadicandError(ArithmeticError):
    """Arithmetic between quadratic extensions with different radicands."""


_RATIONAL = (int, Fraction)

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse an exact rational literal "p" or "p/q".  Decimal forms are
    rejected on purpose: this package never accepts floats."""
    if not isinstance(text, str) or not _FRACTION_RE.match(text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


def rational_sqrt(c: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if c is not a perfect square
    (negative c always returns None)."""
    c = Fraction(c)
    if c < 0:
        return None
    pn, pd = c.numerator, c.denominator
    rn, rd = math.isqrt(pn), math.isqrt(pd)
    if rn * rn == pn and rd * rd == pd:
        return Fraction(rn, rd)
    return None


@dataclass(slots=True)
class DualNumber:
    """value + eps*slope with eps**2 = 0.

    Components live in any commutative ring understood by the surrounding
    code (Fraction, Poly, ...).  Division requires the divisor's value part
    to be invertible; dual numbers themselves form a ring with zero
    divisors, which is exactly what makes them carry first derivatives.
    """

    value: object
    slope: object

    def __add__(self, other):
        if isinstance(other, DualNumber):
            return DualNumber(self.value + other.value, self.slope + other.slope)
        if isinstance(other, _RATIONAL):
            return DualNumber(self.value + other, self.slope)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return DualNumber(-self.value, -self.slope)

    def __sub__(self, other):
        res = self.__add__(-other if isinstance(other, DualNumber) else other)
        if res is NotImplemented:
            return NotImplemented
        if not isinstance(other, DualNumber):
            return DualNumber(self.value - other, self.slope)
        return res

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, DualNumber):
            return DualNumber(
                self.value * other.value,
                self.value * other.slope + self.slope * other.value,
            )
        if isinstance(other, _RATIONAL):
            return DualNumber(self.value * other, self.slope * other)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "DualNumber":
        inv = Fraction(1, 1) / self.value if isinstance(self.value, _RATIONAL) else 1 / self.value
        return DualNumber(inv, -(inv * inv) * self.slope)

    def __truediv__(self, other):
        if isinstance(other, DualNumber):
            return self * other.reciprocal()
        if isinstance(other, _RATIONAL):
            return DualNumber(self.value / other, self.slope / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("dual powers take non-negative integer exponents")
        result = DualNumber(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, DualNumber):
            return self.value == other.value and self.slope == other.slope
        if isinstance(other, _RATIONAL):
            return self.value == other and self.slope == 0
        return NotImplemented

    def __bool__(self):
        return bool(self.value) or bool(self.slope)

    def __repr__(self):
        return f"({self.value} + eps*{self.slope})"


@dataclass(slots=True)
class QuadExt:
    """a + b*sqrt(m) with rational a, b, m.

    A single radicand per value; combining different radicands raises
    MixedRadicandError rather than guessing a compositum.  m may be
    negative (the arithmetic is formal), but m must not be a perfect
    square when b != 0; use plain Fractions for those.
    """

    a: Fraction
    b: Fraction
    m: Fraction

    @staticmethod
    def sqrt_of(m: Fraction) -> "QuadExt | Fraction":
        """sqrt(m) as an exact scalar: a Fraction when m is a perfect
        square, a QuadExt generator otherwise."""
        m = Fraction(m)
        r = rational_sqrt(m)
        if r is not None:
            return r
        return QuadExt(Fraction(0), Fraction(1), m)

    def _join(self, other: "QuadExt") -> Fraction:
        if self.m == other.m or not other.b:
            return self.m
        if not self.b:
            return other.m
        raise MixedRadicandError(f"radicands differ: {self.m} vs {other.m}")

    def __add__(self, other):
        if isinstance(other, QuadExt):
            m = self._join(other)
            return QuadExt(self.a + other.a, self.b + other.b, m)
        if isinstance(other, _RATIONAL):
            return QuadExt(self.a + other, self.b, self.m)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        if isinstance(other, (QuadExt, *_RATIONAL)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            m = self._join(other)
            return QuadExt(
                self.a * other.a + self.b * other.b * m,
                self.a * other.b + self.b * other.a,
                m,
            )
        if isinstance(other, _RATIONAL):
            return QuadExt(self.a * other, self.b * other, self.m)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.m)

    def reciprocal(self) -> "QuadExt":
        norm = self.a * self.a - self.b * self.b * self.m
        if not norm:
            raise ZeroDivisionError("QuadExt with vanishing norm")
        return QuadExt(self.a / norm, -self.b / norm, self.m)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.reciprocal()
        if isinstance(other, _RATIONAL):
            return QuadExt(self.a / other, self.b / other, self.m)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QuadExt powers take non-negative integer exponents")
        result = QuadExt(Fraction(1), Fraction(0), self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b and other.b and self.m != other.m:
                return False
            return self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.m}))"


def to_rational(x) -> Fraction:
    """Collapse a scalar to a plain Fraction.

    Raises RationalityError when an irrational (or first-order) part
    survives; downstream this is the "irrationality leak" guard, since
    every final cubic value must be Galois-stable.
    """
    if isinstance(x, _RATIONAL):
        return Fraction(x)
    if isinstance(x, QuadExt):
        if x.b != 0:
            raise RationalityError(f"irrational part survives: {x!r}")
        return Fraction(x.a)
    if isinstance(x, DualNumber):
        if x.slope != 0:
            raise RationalityError(f"first-order part survives: {x!r}")
        return to_rational(x.value)
    raise RationalityError(f"not a rational scalar: {x!r}")
