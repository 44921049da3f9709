"""Reduced rational functions in one variable over Q."""
from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, poly_gcd


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Polynomial) else Polynomial([num])
        den = Polynomial([1]) if den is None else den
        den = den if isinstance(den, Polynomial) else Polynomial([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = Fraction(den.lead)
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    def __repr__(self):
        return f"RationalFunction({self.num!s} / {self.den!s})"

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _wrap(self, other) -> "RationalFunction":
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other):
        o = self._wrap(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(1) / self ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def compose(self, inner: Polynomial) -> "RationalFunction":
        """self(inner(t)) for a polynomial substitution."""
        return RationalFunction(self.num.compose(inner), self.den.compose(inner))

    def pole_order(self, factor: Polynomial) -> int:
        """Multiplicity of an irreducible factor in the denominator."""
        n = 0
        d = self.den
        while True:
            q, r = d.divmod(factor)
            if not r.is_zero():
                return n
            d = q
            n += 1


def rational_function_equal(f: RationalFunction, g: RationalFunction) -> bool:
    """Identity test by cross multiplication."""
    return (f.num * g.den - g.num * f.den).is_zero()
