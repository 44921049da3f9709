"""Dense univariate polynomials with exact coefficients.

Coefficients are stored lowest degree first. Most operations only need ring
arithmetic, so coefficients may be any exact ring element (Fractions,
quadratic or cubic extension elements). Division, gcd and everything built
on them assume Fraction coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ZeroPolynomialError


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


def _is_zero(c) -> bool:
    return c == 0


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        out = cls([lead])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial([other])
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if i and c == 1:
                terms.append(f"+{mono}")
            elif i and c == -1:
                terms.append(f"-{mono}")
            else:
                cs = str(c)
                if not cs.startswith("-"):
                    cs = "+" + cs
                if mono:
                    cs = f"{cs}*{mono}" if "/" not in cs else f"({cs})*{mono}"
                terms.append(cs)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    # -- ring operations ---------------------------------------------------

    def _wrap(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = _coerce(other)
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Polynomial([Fraction(0) if c is None else c for c in out])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    # -- evaluation and composition -----------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for any ring element x."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- field operations (Fraction coefficients) ---------------------------

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = 1 / Fraction(other.lead) if isinstance(other.lead, Fraction) else None
        if inv_lead is None:
            raise TypeError("division needs Fraction coefficients")
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, oc in enumerate(other.coeffs):
                rem[k - dq + j] -= c * oc
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / Fraction(self.lead))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over Q by Euclid's algorithm (gcd(0, 0) = 0)."""
    a, b = f.monic(), g.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial()
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def lagrange_interpolate(xs: Sequence, ys: Sequence) -> Polynomial:
    """Interpolating polynomial through (xs[i], ys[i]); coefficients are
    exact for exact input."""
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    total = Polynomial()
    for i, xi in enumerate(xs):
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        total = total + basis * (ys[i] / denom)
    return total


X = Polynomial.x()
