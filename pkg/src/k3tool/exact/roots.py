"""Exact multiplicity structure of univariate polynomials, and numeric roots
placed on top of it."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import mpmath

from .bigcomplex import DEFAULT_PREC, MAX_PREC, BigComplex, PrecisionExhausted
from .poly import Polynomial, ZeroPolynomialError, poly_gcd


@dataclass(frozen=True)
class RootStructure:
    factors: tuple[tuple[Polynomial, int], ...]
    unit: Fraction = Fraction(1)
    field_note: str = "rational"

    def recombine(self) -> Polynomial:
        out = Polynomial([self.unit])
        for f, m in self.factors:
            out = out * f**m
        return out

    def multiplicity_of(self, factor: Polynomial) -> int:
        factor = factor.monic()
        for f, m in self.factors:
            if (f % factor).is_zero():
                return m
        return 0

    def multiplicities(self) -> list[int]:
        """One entry per distinct complex root."""
        out = []
        for f, m in self.factors:
            out.extend([m] * f.degree)
        return sorted(out, reverse=True)


def integer_primitive(f: Polynomial) -> list[int]:
    """Integer coefficient list proportional to f with content 1."""
    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def yun(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Square-free factorization of a monic polynomial (Yun's algorithm)."""
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a).monic()
    c = fp.exact_div(a) if not fp.is_zero() else Polynomial()
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g).monic()
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def rational_roots(f: Polynomial) -> list[Fraction]:
    """All rational roots of a square-free f over Q.

    A rational root p/q in lowest terms of an integer-primitive polynomial
    with leading coefficient L has q | L, so L*root is an integer; we locate
    real roots numerically, round L*root, and verify exactly.
    """
    if f.degree < 1:
        return []
    if f.degree == 1:
        return [-Fraction(f[0]) / Fraction(f[1])]
    ints = integer_primitive(f)
    lead = abs(ints[-1])
    height = max(abs(c) for c in ints)
    prec = 2 * (height.bit_length() + lead.bit_length()) + 64
    out = set()
    with mpmath.workprec(prec):
        try:
            approx = mpmath.polyroots(ints[::-1], maxsteps=200, extraprec=prec)
        except mpmath.libmp.libhyper.NoConvergence:
            approx = mpmath.polyroots(ints[::-1], maxsteps=2000, extraprec=4 * prec)
        for z in approx:
            z = mpmath.mpc(z)
            if abs(z.imag) > mpmath.mpf(2) ** (-prec // 4) * (1 + abs(z.real)):
                continue
            cand = Fraction(int(mpmath.nint(z.real * lead)), lead)
            if f(cand) == 0:
                out.add(cand)
    return sorted(out)


def squarefree_decompose(f: Polynomial) -> RootStructure:
    """Pairwise-coprime square-free factors with multiplicities; linear
    rational factors are split off each square-free part."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot decompose the zero polynomial")
    unit = Fraction(f.lead)
    if f.degree == 0:
        return RootStructure((), unit, "rational")
    parts = yun(f.monic())
    factors: list[tuple[Polynomial, int]] = []
    max_deg = 1
    for g, m in parts:
        rest = g
        for r in rational_roots(g):
            lin = Polynomial([-r, 1])
            factors.append((lin, m))
            rest = rest.exact_div(lin)
        if rest.degree > 0:
            factors.append((rest.monic(), m))
            max_deg = max(max_deg, rest.degree)
    note = "rational" if max_deg == 1 else ("quadratic" if max_deg == 2 else "numeric")
    factors.sort(key=lambda fm: (fm[0].degree, -fm[1], [Fraction(c) for c in fm[0].coeffs]))
    return RootStructure(tuple(factors), unit, note)


def _numeric_roots_squarefree(g: Polynomial, prec: int) -> list:
    """Approximate roots of a square-free polynomial, separated at prec."""
    ints = integer_primitive(g)
    with mpmath.workprec(prec):
        roots = mpmath.polyroots(ints[::-1], maxsteps=400, extraprec=prec)
        roots = [mpmath.mpc(r) for r in roots]
        scale = max(abs(mpmath.mpf(c)) for c in ints)
        tol = mpmath.mpf(2) ** (-(prec // 2)) * scale
        for r in roots:
            val = mpmath.polyval(ints[::-1], r)
            if abs(val) > tol * max(1, abs(r)) ** len(ints):
                raise PrecisionExhausted(f"residual too large at {prec} bits")
        sep = mpmath.mpf(2) ** (-(prec // 4))
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                if abs(roots[i] - roots[j]) < sep:
                    raise PrecisionExhausted(f"roots not separated at {prec} bits")
    return roots


def complex_roots(f: Polynomial, precision_bits: int = DEFAULT_PREC) -> list[tuple[BigComplex, int]]:
    """Roots of f with exact multiplicities; numeric placement only for
    irrational roots. Retries with doubled precision up to 1024 bits."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    rs = squarefree_decompose(f)
    out: list[tuple[BigComplex, int]] = []
    for g, m in rs.factors:
        if g.degree == 1:
            out.append((BigComplex.make(-g[0] / g[1], precision_bits), m))
            continue
        prec = precision_bits
        while True:
            try:
                roots = _numeric_roots_squarefree(g, prec)
                break
            except (PrecisionExhausted, mpmath.libmp.libhyper.NoConvergence):
                prec *= 2
                if prec > MAX_PREC:
                    raise PrecisionExhausted(
                        f"could not separate roots of {g} below {MAX_PREC} bits"
                    ) from None
        for r in roots:
            out.append((BigComplex(r.real, r.imag, precision_bits), m))
    return out
