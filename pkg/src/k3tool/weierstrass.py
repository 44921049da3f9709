"""Elliptic fibrations y^2 = x^3 + g2(t) x + g3(t) over the projective line.

Kodaira types are read off the valuation triple (ord g2, ord g3, ord Delta)
at each point of the base, using Tate's table for short Weierstrass models
in characteristic zero. The point at infinity is handled through the
weights of g2 and g3 (8 and 12 for a K3 surface): the valuation there is the
weight minus the degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NonMinimalModel, NotAnEllipticFibration, NotSingularAtInfinity, PreconditionError
from .exact import BigComplex, Polynomial, RationalFunction, poly_gcd, squarefree_decompose
from .exact.bigcomplex import DEFAULT_PREC
from .exact.roots import complex_roots

INF = math.inf


@dataclass(frozen=True, order=True)
class KodairaType:
    """A Kodaira fiber type. ``kind`` is one of I, I*, II, III, IV, IV*,
    III*, II*; ``n`` is the index for I_n and I*_n (0 otherwise)."""

    kind: str
    n: int = 0

    _EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}

    @property
    def euler_number(self) -> int:
        if self.kind == "I":
            return self.n
        if self.kind == "I*":
            return self.n + 6
        return self._EULER[self.kind]

    @property
    def label(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I*{self.n}"
        return self.kind

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, label: str) -> "KodairaType":
        if label.startswith("I*"):
            return cls("I*", int(label[2:]))
        if label in cls._EULER:
            return cls(label)
        if label.startswith("I") and label[1:].isdigit():
            return cls("I", int(label[1:]))
        raise ValueError(f"unknown Kodaira label {label!r}")


def kodaira_from_valuations(v2, v3, vd) -> Optional[KodairaType]:
    """Tate's table. Returns None for a smooth fiber; raises NonMinimalModel
    for triples outside the table (including non-minimal ones)."""
    triple = (v2, v3, vd)
    if vd == 0:
        return None
    if vd == INF:
        raise NotAnEllipticFibration("discriminant vanishes identically")
    if v2 >= 4 and v3 >= 6:
        raise NonMinimalModel(triple)
    if v2 == 0 and v3 == 0:
        return KodairaType("I", int(vd))
    if v2 == 0 or v3 == 0:
        raise NonMinimalModel(triple)
    if v3 == 1 and vd == 2:
        return KodairaType("II")
    if v2 == 1 and v3 >= 2 and vd == 3:
        return KodairaType("III")
    if v2 >= 2 and v3 == 2 and vd == 4:
        return KodairaType("IV")
    if v2 >= 2 and v3 >= 3 and vd == 6:
        return KodairaType("I*", 0)
    if v2 == 2 and v3 == 3 and vd > 6:
        return KodairaType("I*", int(vd) - 6)
    if v2 >= 3 and v3 == 4 and vd == 8:
        return KodairaType("IV*")
    if v2 == 3 and v3 >= 5 and vd == 9:
        return KodairaType("III*")
    if v2 >= 4 and v3 == 5 and vd == 10:
        return KodairaType("II*")
    raise NonMinimalModel(triple)


@dataclass(frozen=True)
class WeierstrassFibration:
    g2: Polynomial
    g3: Polynomial
    weight_g2: int = 8
    weight_g3: int = 12

    def __post_init__(self):
        if self.g2.degree > self.weight_g2 or self.g3.degree > self.weight_g3:
            raise PreconditionError("degrees of g2, g3 exceed their weights")

    @property
    def weight_delta(self) -> int:
        return 3 * self.weight_g2


@dataclass(frozen=True)
class FiberLocation:
    """Either a finite point (an exact square-free factor of the
    discriminant, plus one of its roots) or the point at infinity."""

    factor: Optional[Polynomial] = None
    root: Optional[BigComplex] = None
    exact: Optional[Fraction] = None

    @property
    def is_infinity(self) -> bool:
        return self.factor is None

    def describe(self) -> str:
        if self.is_infinity:
            return "infinity"
        if self.exact is not None:
            return str(self.exact)
        return f"root of {self.factor}"


INFINITY = FiberLocation()


@dataclass(frozen=True)
class FiberRecord:
    location: FiberLocation
    kodaira: KodairaType
    delta_order: int
    valuations: tuple = field(default=(), compare=False)


def discriminant(fib: WeierstrassFibration) -> Polynomial:
    """4 g2^3 + 27 g3^2."""
    d = fib.g2**3 * 4 + fib.g3**2 * 27
    if d.is_zero():
        raise NotAnEllipticFibration("4 g2^3 + 27 g3^2 vanishes identically")
    return d


def functional_invariant(fib: WeierstrassFibration) -> RationalFunction:
    """J = 4 g2^3 / Delta, normalized so J = 1 where g3 = 0 and J = 0
    where g2 = 0."""
    return RationalFunction(fib.g2**3 * 4, discriminant(fib))


def valuation(p: Polynomial, factor: Polynomial):
    """Order of vanishing of p along a square-free factor all of whose
    roots share the same order; infinity for p = 0."""
    if p.is_zero():
        return INF
    n = 0
    while True:
        q, r = p.divmod(factor)
        if not r.is_zero():
            return n
        p = q
        n += 1


def _split_by_valuation(h: Polynomial, p: Polynomial) -> list[tuple[Polynomial, object]]:
    """Split square-free h into pieces on which ord(p) is constant."""
    if p.is_zero():
        return [(h, INF)]
    out = []
    remaining, q, k = h, p, 0
    while remaining.degree > 0:
        g = poly_gcd(remaining, q)
        part = remaining.exact_div(g) if g.degree >= 0 else remaining
        if part.degree > 0:
            out.append((part.monic(), k))
        if g.degree <= 0:
            break
        remaining = g
        q = q.exact_div(g)
        k += 1
    return out


def _as_factor(location) -> Polynomial:
    if isinstance(location, Polynomial):
        return location.monic()
    if isinstance(location, FiberLocation):
        if location.is_infinity:
            raise PreconditionError("use classify_infinity_fiber for the point at infinity")
        return location.factor
    return Polynomial([-Fraction(location), 1])


def classify_finite_fiber(fib: WeierstrassFibration, location) -> KodairaType:
    """Kodaira type at a finite point given as a rational number or as a
    square-free factor whose roots share one valuation triple."""
    factor = _as_factor(location)
    delta = discriminant(fib)
    vd = valuation(delta, factor)
    if vd == 0:
        raise PreconditionError(f"{location} is not a root of the discriminant")
    triple = (valuation(fib.g2, factor), valuation(fib.g3, factor), vd)
    kt = kodaira_from_valuations(*triple)
    return kt


def infinity_valuations(fib: WeierstrassFibration) -> tuple:
    """(ord g2, ord g3, ord Delta) at infinity, after minimizing there.

    When g2 and g3 both vanish to order at least 4 and 6 at infinity the
    model is not minimal there; dropping the weights by (4, 6) is the
    standard fix and leaves all finite fibers unchanged.
    """
    delta = discriminant(fib)
    w2, w3 = fib.weight_g2, fib.weight_g3
    while True:
        v2 = INF if fib.g2.is_zero() else w2 - fib.g2.degree
        v3 = INF if fib.g3.is_zero() else w3 - fib.g3.degree
        if v2 >= 4 and v3 >= 6 and w2 >= 4 and w3 >= 6:
            w2, w3 = w2 - 4, w3 - 6
            continue
        return v2, v3, 3 * w2 - delta.degree


def classify_infinity_fiber(fib: WeierstrassFibration) -> KodairaType:
    kt = kodaira_from_valuations(*infinity_valuations(fib))
    if kt is None:
        raise NotSingularAtInfinity("the fiber at infinity is smooth")
    return kt


def singular_factors(fib: WeierstrassFibration) -> list[tuple[Polynomial, tuple]]:
    """Square-free pieces of the discriminant carrying a constant valuation
    triple, each with that triple."""
    delta = discriminant(fib)
    pieces = []
    for h, m in squarefree_decompose(delta).factors:
        for h2, v2 in _split_by_valuation(h, fib.g2):
            for h3, v3 in _split_by_valuation(h2, fib.g3):
                pieces.append((h3, (v2, v3, m)))
    return pieces


def full_fiber_table(fib: WeierstrassFibration, precision_bits: int = DEFAULT_PREC) -> list[FiberRecord]:
    """One record per singular fiber: every root of Delta, plus infinity
    when the fiber there is singular."""
    records = []
    for factor, triple in singular_factors(fib):
        kt = kodaira_from_valuations(*triple)
        if factor.degree == 1:
            exact = -factor[0] / factor[1]
            roots = [BigComplex.make(exact, precision_bits)]
        else:
            exact = None
            roots = [r for r, _ in complex_roots(factor, precision_bits)]
        for r in roots:
            records.append(FiberRecord(FiberLocation(factor, r, exact), kt, triple[2], triple))
    try:
        v = infinity_valuations(fib)
        kt = kodaira_from_valuations(*v)
        if kt is not None:
            records.append(FiberRecord(INFINITY, kt, int(v[2]), v))
    except NotSingularAtInfinity:
        pass
    return records


def euler_sum(records) -> int:
    return sum(r.kodaira.euler_number for r in records)


def fiber_multiset(records, finite_only: bool = False) -> dict[str, int]:
    """Counts of Kodaira labels, e.g. {"I*12": 1, "I1": 6}."""
    out: dict[str, int] = {}
    for r in records:
        if finite_only and r.location.is_infinity:
            continue
        out[r.kodaira.label] = out.get(r.kodaira.label, 0) + 1
    return out
