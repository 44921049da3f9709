"""Rational numbers and their wire format.

Rationals are :class:`fractions.Fraction` throughout; it already keeps the
numerator and denominator coprime with a positive denominator, which makes
equality structural.
"""
from __future__ import annotations

import re
from functools import lru_cache
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" text; integers print without the "/1"."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def rational_nth_root(x: Fraction, k: int) -> Fraction | None:
    """Exact rational k-th root (real branch for odd k), or None."""
    x = Fraction(x)
    sign = 1
    if x < 0:
        if k % 2 == 0:
            return None
        sign = -1
        x = -x
    num = integer_nth_root(x.numerator, k)
    den = integer_nth_root(x.denominator, k)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


@lru_cache(maxsize=8192)
def squarefree_part(n: int, bound: int = 1 << 14) -> tuple[int, int]:
    """Split n > 0 as s * f**2 with s square-free; returns (s, f).

    Trial division by primes below ``bound`` plus a perfect-square test on
    the cofactor. A cofactor hiding a square of a large prime is left alone;
    the result is then still a valid (non-minimal) representative, which
    :class:`~k3tool.exact.quadext.QuadExtElement` equality tolerates.
    """
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, f = 1, 1
    p = 2
    while p * p <= n and p < bound:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    r = integer_nth_root(n, 2)
    if r is not None:
        f *= r
    else:
        s *= n
    return s, f
