"""Exact arithmetic in the quadratic field Q[sqrt(3)].

Elements are a + b*sqrt(3) with rational a, b. Since sqrt(3) is irrational,
an element is zero iff both coefficients are zero, so structural equality of
the (always canonical) ``fractions.Fraction`` coefficients is mathematical
equality. This is the substrate for bit-exact verification of the defect
identity on planar rational inputs: no tolerances, the residual must come
out as the exact zero element.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Rational scalar type used for the exact coefficients. ``Fraction`` keeps
#: arbitrary-precision integers and reduces to canonical form (positive
#: denominator, gcd 1) after every operation.
Rational = Fraction

_RationalLike = int | Fraction | str


def _coerce(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("QSqrt3 coefficients must be exact (int, Fraction, or str), not float")
    return Fraction(x)


class QSqrt3:
    """Exact element a + b*sqrt(3) of Q[sqrt(3)]."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: _RationalLike = 0, b: _RationalLike = 0) -> None:
        self._a = _coerce(a)
        self._b = _coerce(b)

    @property
    def a(self) -> Fraction:
        """Rational part (coefficient of 1)."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Root part (coefficient of sqrt(3))."""
        return self._b

    @classmethod
    def from_rational(cls, x: _RationalLike) -> "QSqrt3":
        return cls(x, 0)

    def __repr__(self) -> str:
        return f"QSqrt3({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        return f"{self._a} + {self._b}*sqrt(3)"

    def __eq__(self, other) -> bool:
        if isinstance(other, QSqrt3):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __neg__(self) -> "QSqrt3":
        return QSqrt3(-self._a, -self._b)

    def __add__(self, other) -> "QSqrt3":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt3(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other) -> "QSqrt3":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt3(self._a - other._a, self._b - other._b)

    def __rsub__(self, other) -> "QSqrt3":
        return (-self) + other

    def __mul__(self, other) -> "QSqrt3":
        # (a + b*s)(c + d*s) = (ac + 3bd) + (ad + bc)*s, with s**2 = 3.
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        return QSqrt3(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def _lift(self, other):
        if isinstance(other, QSqrt3):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt3(other, 0)
        return NotImplemented

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(3), without floats.

        If the coefficient signs agree (or one vanishes) the sign is
        immediate; otherwise |a| vs sqrt(3)|b| is decided by comparing
        a**2 with 3*b**2 in exact rational arithmetic.
        """
        sa = _sgn(self._a)
        sb = _sgn(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs; a**2 = 3*b**2 would make sqrt(3) rational, so the
        # comparison is strict.
        if self._a * self._a > 3 * self._b * self._b:
            return sa
        return sb

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(3.0)


def _sgn(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


ZERO = QSqrt3(0, 0)
ONE = QSqrt3(1, 0)
SQRT3 = QSqrt3(0, 1)
