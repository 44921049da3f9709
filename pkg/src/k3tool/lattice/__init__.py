"""Integer quadratic forms: named lattices, discriminant forms, root
enumeration and curve configurations."""
from .configs import (
    CONFIG_NAMES,
    Complement,
    CurveConfig,
    DivisorClass,
    SpanLattice,
    curve_config,
    divisor_square,
    double_kummer_lattice,
    gram_of_classes,
    inose_spans,
    orthogonal_complement_in,
    saturation,
    span_lattice,
    two_classes,
)
from .discriminant import DiscriminantForm, discriminant_form, find_isometry, is_isometric
from .enumerate import USE_NUMBA, short_vectors, vectors_of_norm
from .named import NAMES, E8, H, H2, Lattice, direct_sum, e8_sum_vs_d16plus, named_lattice, nikulin_curve_vectors, roots

__all__ = [
    "CONFIG_NAMES",
    "Complement",
    "CurveConfig",
    "DiscriminantForm",
    "DivisorClass",
    "E8",
    "H",
    "H2",
    "Lattice",
    "NAMES",
    "SpanLattice",
    "USE_NUMBA",
    "curve_config",
    "direct_sum",
    "discriminant_form",
    "divisor_square",
    "double_kummer_lattice",
    "e8_sum_vs_d16plus",
    "find_isometry",
    "gram_of_classes",
    "inose_spans",
    "is_isometric",
    "named_lattice",
    "nikulin_curve_vectors",
    "orthogonal_complement_in",
    "roots",
    "saturation",
    "short_vectors",
    "span_lattice",
    "two_classes",
    "vectors_of_norm",
]
