"""Arbitrary-precision complex numbers (thin layer over mpmath)."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import PrecisionExhausted

DEFAULT_PREC = int(os.environ.get("K3TOOL_PREC", "128"))
MAX_PREC = 1024


def _to_mpc(x, prec: int):
    with mpmath.workprec(prec):
        if isinstance(x, BigComplex):
            return mpmath.mpc(x.re, x.im)
        if isinstance(x, Fraction):
            return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
        if hasattr(x, "to_bigcomplex"):
            return _to_mpc(x.to_bigcomplex(prec), prec)
        return mpmath.mpc(x)


@dataclass(frozen=True)
class BigComplex:
    re: mpmath.mpf
    im: mpmath.mpf
    precision_bits: int = DEFAULT_PREC

    @classmethod
    def make(cls, value, precision_bits: int = DEFAULT_PREC) -> "BigComplex":
        z = _to_mpc(value, precision_bits)
        return cls(z.real, z.imag, precision_bits)

    @classmethod
    def parse(cls, text: str, precision_bits: int = DEFAULT_PREC) -> "BigComplex":
        """Parse the "re,im" wire format."""
        parts = text.split(",")
        if len(parts) == 1:
            parts.append("0")
        if len(parts) != 2:
            raise ValueError(f"complex literal must be 're,im': {text!r}")
        with mpmath.workprec(precision_bits):
            return cls(mpmath.mpf(parts[0].strip()), mpmath.mpf(parts[1].strip()), precision_bits)

    @property
    def value(self) -> mpmath.mpc:
        with mpmath.workprec(self.precision_bits):
            return mpmath.mpc(self.re, self.im)

    def _binop(self, other, op):
        prec = min(self.precision_bits, other.precision_bits) if isinstance(other, BigComplex) else self.precision_bits
        with mpmath.workprec(prec):
            z = op(mpmath.mpc(self.re, self.im), _to_mpc(other, prec))
            return BigComplex(z.real, z.imag, prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self):
        # mpf negation rounds to the ambient context precision
        with mpmath.workprec(self.precision_bits):
            return BigComplex(-self.re, -self.im, self.precision_bits)

    def __pow__(self, n: int):
        with mpmath.workprec(self.precision_bits):
            z = mpmath.mpc(self.re, self.im) ** n
            return BigComplex(z.real, z.imag, self.precision_bits)

    def __abs__(self):
        with mpmath.workprec(self.precision_bits):
            return abs(mpmath.mpc(self.re, self.im))

    def conjugate(self) -> "BigComplex":
        with mpmath.workprec(self.precision_bits):
            return BigComplex(self.re, -self.im, self.precision_bits)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_wire(self, digits: int | None = None) -> str:
        """Decimal "re,im" text at (about) the carried precision."""
        digits = digits or max(15, int(self.precision_bits * 0.30103))
        with mpmath.workprec(self.precision_bits):
            return f"{mpmath.nstr(self.re, digits)},{mpmath.nstr(self.im, digits)}"

    def close_to(self, other, tol) -> bool:
        return abs(self - other) <= tol
