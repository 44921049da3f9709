"""The ring Q[q]/(q^3 - c).

Used to carry a formal cube root q of a rational c without ever taking a
numeric root. When c is a nonzero rational cube the ring splits, but the
arithmetic below stays valid either way; callers that want the rational
branch substitute it explicitly.
"""
from __future__ import annotations

from fractions import Fraction


class CubicExtElement:
    __slots__ = ("c0", "c1", "c2", "modulus_constant")

    def __init__(self, c0=0, c1=0, c2=0, modulus_constant=1):
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)
        self.modulus_constant = Fraction(modulus_constant)

    @classmethod
    def generator(cls, modulus_constant) -> "CubicExtElement":
        """The class of q itself."""
        return cls(0, 1, 0, modulus_constant)

    def _lift(self, other) -> "CubicExtElement":
        if isinstance(other, CubicExtElement):
            if other.modulus_constant != self.modulus_constant:
                raise ValueError("elements of different quotient rings")
            return other
        if isinstance(other, (int, Fraction)):
            return CubicExtElement(other, 0, 0, self.modulus_constant)
        return NotImplemented

    def is_rational(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not in the rational subring")
        return self.c0

    def __repr__(self):
        return f"CubicExtElement({self.c0}, {self.c1}, {self.c2}; q^3={self.modulus_constant})"

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CubicExtElement(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.modulus_constant)

    __radd__ = __add__

    def __neg__(self):
        return CubicExtElement(-self.c0, -self.c1, -self.c2, self.modulus_constant)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        c = self.modulus_constant
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = o.c0, o.c1, o.c2
        # q^3 -> c, q^4 -> c q
        return CubicExtElement(
            a0 * b0 + c * (a1 * b2 + a2 * b1),
            a0 * b1 + a1 * b0 + c * a2 * b2,
            a0 * b2 + a1 * b1 + a2 * b0,
            c,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CubicExtElement(1, 0, 0, self.modulus_constant)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def norm(self) -> Fraction:
        """Determinant of multiplication-by-self on the basis 1, q, q^2."""
        c = self.modulus_constant
        a, b, d = self.c0, self.c1, self.c2
        return a**3 + c * b**3 + c**2 * d**3 - 3 * c * a * b * d

    def inverse(self) -> "CubicExtElement":
        c = self.modulus_constant
        a, b, d = self.c0, self.c1, self.c2
        # adjugate of the multiplication matrix, first column
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self!r} is a zero divisor")
        return CubicExtElement((a * a - c * b * d) / n, (c * d * d - a * b) / n, (b * b - a * d) / n, c)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CubicExtElement(other, 0, 0, self.modulus_constant) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c0 == other
        if not isinstance(other, CubicExtElement):
            return NotImplemented
        return (self.c0, self.c1, self.c2, self.modulus_constant) == (
            other.c0,
            other.c1,
            other.c2,
            other.modulus_constant,
        )

    def __hash__(self):
        if self.is_rational():
            return hash(self.c0)
        return hash((self.c0, self.c1, self.c2, self.modulus_constant))

    def evaluate_at(self, q_value):
        """Image under q -> q_value (a root of q^3 = c in some ring)."""
        return self.c0 + self.c1 * q_value + self.c2 * q_value * q_value
