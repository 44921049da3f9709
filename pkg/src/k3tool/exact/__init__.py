"""Exact arithmetic kernel."""
from .bigcomplex import BigComplex, PrecisionExhausted
from .cubicext import CubicExtElement
from .mpoly import MPoly
from .poly import X, Polynomial, ZeroPolynomialError, lagrange_interpolate, poly_gcd
from .quadext import QuadExtElement
from .ratfunc import RationalFunction, rational_function_equal
from .rational import Rational, format_rational, parse_rational, rational_nth_root, to_rational
from .roots import RootStructure, complex_roots, rational_roots, squarefree_decompose

__all__ = [
    "BigComplex",
    "CubicExtElement",
    "MPoly",
    "PrecisionExhausted",
    "Polynomial",
    "QuadExtElement",
    "Rational",
    "RationalFunction",
    "RootStructure",
    "X",
    "ZeroPolynomialError",
    "complex_roots",
    "format_rational",
    "lagrange_interpolate",
    "parse_rational",
    "poly_gcd",
    "rational_function_equal",
    "rational_nth_root",
    "rational_roots",
    "squarefree_decompose",
    "to_rational",
]
