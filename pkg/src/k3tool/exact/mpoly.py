"""Sparse multivariate polynomials over Q.

Only what the surface computations need: ring operations, substitution,
partial derivatives and evaluation. Terms are stored as
{exponent tuple: coefficient}.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError("exponent length mismatch")
            if isinstance(c, int):
                c = Fraction(c)
            if c != 0:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def gens(cls, nvars: int) -> tuple["MPoly", ...]:
        return tuple(cls.var(nvars, i) for i in range(nvars))

    def _wrap(self, other) -> "MPoly":
        return other if isinstance(other, MPoly) else MPoly.const(self.nvars, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._wrap(other)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms!r})"

    def __add__(self, other):
        o = self._wrap(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        o = self._wrap(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def degree(self) -> int:
        return max(self.total_degrees(), default=-1)

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(self.nvars, out)

    def gradient(self) -> list["MPoly"]:
        return [self.diff(i) for i in range(self.nvars)]

    def __call__(self, *point):
        """Evaluate at a point whose entries are any ring elements."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        acc = None
        for e, c in self.terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t = t * v**k
            acc = t if acc is None else acc + t
        return Fraction(0) if acc is None else acc

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Compose with polynomial images of the variables."""
        nv = images[0].nvars
        out = MPoly(nv)
        for e, c in self.terms.items():
            t = MPoly.const(nv, c)
            for img, k in zip(images, e):
                if k:
                    t = t * img**k
            out = out + t
        return out

    def divide_exact(self, other: "MPoly") -> "MPoly":
        """Exact division when other is a monomial times a constant."""
        if len(other.terms) != 1:
            raise ValueError("only monomial divisors are supported")
        (oe, oc), = other.terms.items()
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, oe))
            if min(ne) < 0:
                raise ArithmeticError("monomial does not divide")
            out[ne] = c / oc
        return MPoly(self.nvars, out)

    def monomial_gcd(self) -> tuple:
        """Largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        es = list(self.terms)
        return tuple(min(e[i] for e in es) for i in range(self.nvars))
