"""Discriminant groups L*/L with their finite quadratic and bilinear forms,
and an isometry search between two such forms."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import DegenerateLattice, PreconditionError
from . import forms
from .named import Lattice

SEARCH_LIMIT = 1 << 14


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * (x.numerator // (m * x.denominator))


@dataclass(frozen=True)
class DiscriminantForm:
    """Invariant factors d_i > 1 of L*/L, generators g_i (rational vectors
    in the lattice basis) of order d_i, and the table M with
    M_ii = q(g_i) mod 2 and M_ij = b(g_i, g_j) mod 1."""

    invariant_factors: tuple
    generators: tuple
    table: tuple
    even: bool = True

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def q_values(self) -> tuple:
        return tuple(self.table[i][i] for i in range(len(self.table)))

    @property
    def pairing(self) -> tuple:
        return tuple(tuple(_mod(x, 1) for x in row) for row in self.table)

    def elements(self):
        return product(*(range(d) for d in self.invariant_factors))

    def q(self, k) -> Fraction:
        n = len(k)
        m = 2 if self.even else 1
        val = Fraction(0)
        for i in range(n):
            if k[i]:
                val += k[i] * k[i] * self.table[i][i]
                for j in range(i + 1, n):
                    if k[j]:
                        val += 2 * k[i] * k[j] * self.table[i][j]
        return _mod(val, m)

    def b(self, k, l) -> Fraction:
        n = len(k)
        return _mod(sum((k[i] * l[j] * self.table[i][j] for i in range(n) for j in range(n)), Fraction(0)), 1)

    def q_multiset(self) -> Counter:
        if self.order > SEARCH_LIMIT:
            raise PreconditionError("discriminant group too large to tabulate")
        return Counter(self.q(k) for k in self.elements())

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.invariant_factors),
            "q_values": [str(x) for x in self.q_values],
            "pairing": [[str(x) for x in row] for row in self.pairing],
        }


def discriminant_form(lat: Lattice) -> DiscriminantForm:
    g = lat.matrix()
    if lat.rank and lat.det() == 0:
        raise DegenerateLattice("Gram matrix is singular")
    u, d, v = forms.snf_with_transform(g)
    gens = []
    factors = []
    for i in range(lat.rank):
        di = abs(d[i][i])
        if di > 1:
            factors.append(di)
            gens.append(tuple(Fraction(v[r][i], di) for r in range(lat.rank)))
    even = lat.is_even()
    n = len(gens)
    table = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            val = sum(gens[i][r] * g[r][s] * gens[j][s] for r in range(lat.rank) for s in range(lat.rank))
            table[i][j] = _mod(val, 2 if even else 1) if i == j else _mod(val, 1)
    return DiscriminantForm(tuple(factors), tuple(gens), tuple(tuple(r) for r in table), even)


def _element_order(k, factors) -> int:
    from math import gcd

    out = 1
    for ki, d in zip(k, factors):
        o = d // gcd(ki, d)
        out = out * o // gcd(out, o)
    return out


def find_isometry(a: DiscriminantForm, b: DiscriminantForm):
    """Images of a's generators in b (as coefficient tuples) defining an
    isometry a -> b, or None. Both groups must have equal invariant factors."""
    if a.invariant_factors != b.invariant_factors or a.even != b.even:
        return None
    if a.order > SEARCH_LIMIT:
        raise PreconditionError("discriminant group too large for the isometry search")
    if a.q_multiset() != b.q_multiset():
        return None
    elems = [k for k in b.elements() if any(k)]
    n = len(a.invariant_factors)
    candidates = []
    for i in range(n):
        di = a.invariant_factors[i]
        gi = tuple(int(t == i) for t in range(n))
        qi = a.q(gi)
        candidates.append([k for k in elems if _element_order(k, b.invariant_factors) == di and b.q(k) == qi])
    images: list = []

    def extend(i):
        if i == n:
            return True
        gi = tuple(int(t == i) for t in range(n))
        for k in candidates[i]:
            ok = True
            for j in range(i):
                gj = tuple(int(t == j) for t in range(n))
                if b.b(images[j], k) != a.b(gj, gi):
                    ok = False
                    break
            if ok:
                images.append(k)
                if extend(i + 1):
                    return True
                images.pop()
        return False

    if not extend(0):
        return None
    # bijectivity: the images must generate all of b
    seen = set()
    for k in a.elements():
        img = tuple(
            sum(k[i] * images[i][t] for i in range(n)) % b.invariant_factors[t] for t in range(n)
        )
        seen.add(img)
    if len(seen) != b.order:
        return None
    return images


def is_isometric(a: DiscriminantForm, b: DiscriminantForm) -> bool:
    return find_isometry(a, b) is not None
