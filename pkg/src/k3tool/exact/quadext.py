"""Elements base + coeff*sqrt(radicand) of a quadratic extension of Q."""
from __future__ import annotations

from fractions import Fraction

from .rational import integer_nth_root, squarefree_part


def canonical_radicand(d: Fraction) -> tuple[int, Fraction]:
    """Write d = r * s**2 with r a (trial-division) square-free integer.

    Returns (r, s). r == 1 signals a rational square.
    """
    d = Fraction(d)
    if d == 0:
        return 1, Fraction(0)
    sign = -1 if d < 0 else 1
    # sqrt(n/m) = sqrt(n*m)/m
    n = abs(d.numerator) * d.denominator
    if integer_nth_root(n, 2) is not None:
        return sign, Fraction(integer_nth_root(n, 2), d.denominator)
    r, f = squarefree_part(n)
    return sign * r, Fraction(f, d.denominator)


class QuadExtElement:
    """base + coeff*sqrt(radicand), radicand an integer with no small square
    factors. A radicand of 1 means the element is rational (coeff folded
    into base)."""

    __slots__ = ("base", "coeff", "radicand")

    def __init__(self, base, coeff=0, radicand: int = 1):
        base, coeff = Fraction(base), Fraction(coeff)
        radicand = int(radicand)
        if radicand == 0:
            coeff, radicand = Fraction(0), 1
        elif radicand != 1 and coeff != 0:
            r, s = canonical_radicand(Fraction(radicand))
            radicand, coeff = r, coeff * s
        if radicand == 1:
            base, coeff = base + coeff, Fraction(0)
        if coeff == 0:
            radicand = 1
        self.base, self.coeff, self.radicand = base, coeff, radicand

    @classmethod
    def sqrt(cls, d) -> "QuadExtElement":
        r, s = canonical_radicand(Fraction(d))
        if r == 1:
            return cls(s)
        return cls(0, s, r)

    def is_rational(self) -> bool:
        return self.coeff == 0

    def __repr__(self):
        if self.is_rational():
            return f"QuadExtElement({self.base})"
        return f"QuadExtElement({self.base} + {self.coeff}*sqrt({self.radicand}))"

    def _lift(self, other) -> "QuadExtElement":
        if isinstance(other, QuadExtElement):
            if other.is_rational() or self.is_rational() or other.radicand == self.radicand:
                return other
            # same field under a different representative?
            ratio = Fraction(other.radicand, self.radicand)
            root = integer_nth_root(ratio.numerator, 2) if ratio > 0 else None
            rden = integer_nth_root(ratio.denominator, 2) if ratio > 0 else None
            if root is None or rden is None:
                raise ValueError(
                    f"elements of different fields: sqrt({self.radicand}) vs sqrt({other.radicand})"
                )
            return QuadExtElement(other.base, other.coeff * Fraction(root, rden), self.radicand)
        if isinstance(other, (int, Fraction)):
            return QuadExtElement(other)
        return NotImplemented

    def _field_radicand(self, other: "QuadExtElement") -> int:
        return self.radicand if not self.is_rational() else other.radicand

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExtElement(self.base + o.base, self.coeff + o.coeff, self._field_radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(-self.base, -self.coeff, self.radicand)

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
        r = self._field_radicand(o)
        return QuadExtElement(
            self.base * o.base + self.coeff * o.coeff * r,
            self.base * o.coeff + self.coeff * o.base,
            r,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.base**2 - self.coeff**2 * self.radicand

    def conj(self) -> "QuadExtElement":
        return QuadExtElement(self.base, -self.coeff, self.radicand)

    def inverse(self) -> "QuadExtElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conj()
        return QuadExtElement(c.base / n, c.coeff / n, self.radicand)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExtElement(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExtElement(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeff == 0 and self.base == other
        if not isinstance(other, QuadExtElement):
            return NotImplemented
        if self.base != other.base:
            return False
        if self.coeff == 0 or other.coeff == 0:
            return self.coeff == other.coeff
        return (self.coeff > 0) == (other.coeff > 0) and (
            self.coeff**2 * self.radicand == other.coeff**2 * other.radicand
        )

    def __hash__(self):
        if self.is_rational():
            return hash(self.base)
        return hash((self.base, self.coeff**2 * self.radicand))

    def to_complex(self) -> complex:
        import cmath

        return complex(self.base) + float(self.coeff) * cmath.sqrt(self.radicand)
