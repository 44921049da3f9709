"""Configurations of smooth rational curves on K3 surfaces: intersection
matrices, divisor classes supported on them, and the lattices they span."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PreconditionError
from . import forms
from .named import Lattice


@dataclass(frozen=True)
class CurveConfig:
    """Curves with their intersection matrix. ``fibers`` maps a fiber name
    to its coefficient dict, ``sections`` maps the same name to curves
    meeting that fiber once, and ``spans`` lists named sub-configurations.
    ``aliases`` renames curves (alias -> curve name)."""

    name: str
    names: tuple
    gram: tuple
    fibers: dict = field(default_factory=dict, compare=False)
    sections: dict = field(default_factory=dict, compare=False)
    spans: dict = field(default_factory=dict, compare=False)
    aliases: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n or len(self.gram) != n:
            raise ValueError("curve names must be distinct and match the matrix size")
        for i in range(n):
            if self.gram[i][i] != -2:
                raise ValueError(f"{self.names[i]} is not a (-2)-curve")
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i] or (i != j and self.gram[i][j] < 0):
                    raise ValueError("intersection matrix must be symmetric with nonnegative off-diagonal")

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        label = self.aliases.get(label, label)
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"{self.name} has no curve {label!r}") from None

    def intersection(self, a: str, b: str) -> int:
        return self.gram[self.index(a)][self.index(b)]

    def divisor(self, coeffs: dict) -> "DivisorClass":
        v = [0] * self.size
        for label, c in coeffs.items():
            v[self.index(label)] += int(c)
        return DivisorClass(self, tuple(v))

    def curve(self, label: str) -> "DivisorClass":
        return self.divisor({label: 1})

    def fiber(self, name: str) -> "DivisorClass":
        return self.divisor(self.fibers[name])

    def span_lattice(self, labels, name: str = "") -> Lattice:
        idx = [self.index(l) for l in labels]
        return Lattice([[self.gram[i][j] for j in idx] for i in idx], name)

    def lattice(self) -> "SpanLattice":
        return span_lattice(self)

    def relabel(self, mapping: dict, name: str) -> "CurveConfig":
        """Same configuration with curves renamed by ``mapping``; the old
        names stay available as aliases."""
        new = tuple(mapping.get(c, c) for c in self.names)
        ren = lambda d: {mapping.get(k, k): v for k, v in d.items()}
        return CurveConfig(
            name,
            new,
            self.gram,
            fibers={f: ren(c) for f, c in self.fibers.items()},
            sections={f: [mapping.get(s, s) for s in ss] for f, ss in self.sections.items()},
            spans={s: [mapping.get(c, c) for c in cs] if isinstance(cs, list) else ren(cs) for s, cs in self.spans.items()},
            aliases={old: nw for old, nw in mapping.items()},
        )


@dataclass(frozen=True)
class DivisorClass:
    config: CurveConfig
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.config.size:
            raise PreconditionError("coefficient vector does not match the configuration")

    def dot(self, other: "DivisorClass") -> int:
        if other.config is not self.config and other.config.names != self.config.names:
            raise PreconditionError("classes live on different configurations")
        g = self.config.gram
        u, v = self.coefficients, other.coefficients
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])

    def square(self) -> int:
        return self.dot(self)

    def __add__(self, other):
        return DivisorClass(self.config, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __rmul__(self, k: int):
        return DivisorClass(self.config, tuple(k * a for a in self.coefficients))

    def support(self) -> dict:
        return {self.config.names[i]: c for i, c in enumerate(self.coefficients) if c}


def divisor_square(config: CurveConfig, cls) -> int:
    """v^T G v for a DivisorClass, a coefficient dict or a coefficient list."""
    if isinstance(cls, dict):
        cls = config.divisor(cls)
    elif not isinstance(cls, DivisorClass):
        cls = DivisorClass(config, tuple(int(c) for c in cls))
    elif cls.config.names != config.names:
        raise PreconditionError("class is over a different configuration")
    return cls.square()


# -- the lattice spanned by a configuration ---------------------------------------


@dataclass(frozen=True)
class SpanLattice:
    """The lattice generated by the curve classes, i.e. Z^n modulo the
    radical of the intersection matrix. ``basis`` rows are integer
    combinations of curves whose images form a basis."""

    config: CurveConfig
    basis: tuple
    lattice: Lattice

    def coordinates(self, cls: DivisorClass) -> list[int]:
        """Coordinates of a class in ``basis`` (exact, found by solving
        against the Gram matrix)."""
        g = self.config.gram
        rhs = [sum(b[i] * g[i][j] * cls.coefficients[j] for i in range(len(b)) for j in range(len(b))) for b in self.basis]
        sol = _solve(self.lattice.matrix(), rhs)
        if any(Fraction(x).denominator != 1 for x in sol):
            raise ArithmeticError("class is not in the span")
        return [int(x) for x in sol]


def _solve(a, rhs):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def span_lattice(config: CurveConfig) -> SpanLattice:
    g = [list(r) for r in config.gram]
    h, t = forms.hnf_with_transform(g)
    basis = [t[r] for r in range(len(g)) if any(h[r])]
    gram = forms.gram_of(basis, g)
    return SpanLattice(config, tuple(tuple(b) for b in basis), Lattice(gram, config.name))


# -- orthogonal complements -------------------------------------------------------


@dataclass(frozen=True)
class Complement:
    lattice: Lattice
    basis: tuple  # rows in the coordinates of the ambient lattice
    primitive: bool  # whether the input sublattice was primitive
    saturation: tuple  # basis of the primitive closure of the input


def saturation(vectors) -> list[list[int]]:
    """Basis of (Q-span of vectors) intersected with Z^n."""
    vecs = forms.as_int_matrix(vectors)
    k = forms.right_kernel(vecs)
    if not k:
        return forms.identity(len(vecs[0]))
    return forms.right_kernel(k)


def orthogonal_complement_in(lat: Lattice, sub_basis) -> Complement:
    """Orthogonal complement of the sublattice spanned by ``sub_basis``
    (rows of integer coordinates). The complement of any set is saturated;
    a non-primitive input is reported through ``primitive`` and
    ``saturation``."""
    b = forms.as_int_matrix(sub_basis)
    if any(len(r) != lat.rank for r in b):
        raise PreconditionError("sublattice vectors must have the lattice's rank")
    if forms.rank(b) != len(b):
        raise PreconditionError("sublattice generators are linearly dependent")
    factors = forms.invariant_factors(b)
    primitive = all(d == 1 for d in factors)
    comp = forms.right_kernel(forms.matmul(b, lat.matrix()))
    gram = forms.gram_of(comp, lat.matrix()) if comp else []
    return Complement(
        Lattice(gram, f"{lat.name}^perp"),
        tuple(tuple(r) for r in comp),
        primitive,
        tuple(tuple(r) for r in (b if primitive else saturation(b))),
    )


# -- the shipped configurations ---------------------------------------------------


def _graph_config(name, names, edges, **kw) -> CurveConfig:
    n = len(names)
    idx = {c: i for i, c in enumerate(names)}
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        g[idx[a]][idx[b]] += 1
        g[idx[b]][idx[a]] += 1
    return CurveConfig(name, tuple(names), tuple(tuple(r) for r in g), **kw)


def _chain(labels):
    return list(zip(labels, labels[1:]))


def _inose_diag11() -> CurveConfig:
    cs = [f"C{i}" for i in range(1, 10)]
    ds = [f"D{i}" for i in range(1, 10)]
    names = cs + ["S1"] + ds
    spine = ["C1", "C2", "C3", "C5", "C6", "C7", "C8", "C9", "S1", "D9", "D8", "D7", "D6", "D5", "D3", "D2", "D1"]
    edges = _chain(spine) + [("C3", "C4"), ("D3", "D4")]
    twos = ["C3", "C5", "C6", "C7", "C8", "C9", "S1", "D9", "D8", "D7", "D6", "D5", "D3"]
    i12 = {c: 2 for c in twos}
    i12.update({"C2": 1, "C4": 1, "D4": 1, "D2": 1})
    ii_star = {"C1": 2, "C2": 4, "C3": 6, "C4": 3, "C5": 5, "C6": 4, "C7": 3, "C8": 2, "C9": 1}
    return _graph_config(
        "inose_diag11",
        names,
        edges,
        fibers={"I*12": i12, "II*": ii_star},
        sections={"I*12": ["C1", "D1"], "II*": ["S1"]},
        spans={
            "E8_first": ["C1", "C2", "C4", "C3", "C5", "C6", "C7", "C8"],
            "E8_second": ["D8", "D7", "D6", "D5", "D3", "D4", "D2", "D1"],
            "H": {"curve": "S1", "fiber": "II*"},
        },
    )


# curve names of the quartic's dual diagram in terms of the C/D/S labels
QUARTIC_LABELS = {
    "C1": "a1", "C2": "a2", "C3": "a3", "C4": "L1", "C5": "a4", "C6": "a5", "C7": "a6",
    "C8": "a7", "C9": "a8", "S1": "a9", "D9": "a10", "D8": "a11", "D7": "L2", "D6": "e1",
    "D5": "e2", "D3": "e3", "D4": "e4", "D2": "e5", "D1": "e6",
}


def _inose_quartic_diag() -> CurveConfig:
    return _inose_diag11().relabel(QUARTIC_LABELS, "inose_quartic_diag")


def _quotient_diag22_33() -> CurveConfig:
    rs = [f"R{i}" for i in range(1, 10)]
    fs = [f"F{i}" for i in range(1, 9)]
    names = rs + ["S1t"] + fs
    edges = [("R1", "R2"), ("R2", "R3"), ("R3", "R4")] + _chain(["R3", "R5", "R6", "R7", "R8", "R9", "S1t"])
    edges += [("S1t", "F1"), ("S1t", "F2")]
    i6 = {c: 2 for c in ["R3", "R5", "R6", "R7", "R8", "R9", "S1t"]}
    i6.update({"R2": 1, "R4": 1, "F1": 1, "F2": 1})
    ii_star = {"R1": 2, "R2": 4, "R3": 6, "R4": 3, "R5": 5, "R6": 4, "R7": 3, "R8": 2, "R9": 1}
    return _graph_config(
        "quotient_diag22_33",
        names,
        edges,
        fibers={"I*6": i6, "II*": ii_star},
        sections={"I*6": ["R1"], "II*": ["S1t"]},
        spans={
            "E8": ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"],
            "H2": {"first": {"S1t": 2, "F1": 1, "F2": 1}, "second": "II*"},
            "Nikulin_curves": fs,
        },
    )


def _double_kummer_pencil() -> CurveConfig:
    hs = [f"H{i}" for i in range(4)]
    gs = [f"G{j}" for j in range(4)]
    es = [f"E{i}{j}" for i in range(4) for j in range(4)]
    edges = []
    for i in range(4):
        for j in range(4):
            edges += [(f"H{i}", f"E{i}{j}"), (f"G{j}", f"E{i}{j}")]
    special = {c: 2 for c in ["G1", "E01", "H0", "E00", "G0", "E10", "H1"]}
    special.update({"E21": 1, "E31": 1, "E12": 1, "E13": 1})
    return _graph_config(
        "double_kummer_pencil",
        hs + gs + es,
        edges,
        fibers={"special": special},
        sections={"special": ["H2", "H3", "G2", "G3"]},
        spans={"exceptional": es},
    )


_CONFIGS = {
    "inose_diag11": _inose_diag11,
    "inose_quartic_diag": _inose_quartic_diag,
    "quotient_diag22_33": _quotient_diag22_33,
    "double_kummer_pencil": _double_kummer_pencil,
}

CONFIG_NAMES = tuple(_CONFIGS)


def curve_config(name: str) -> CurveConfig:
    if name not in _CONFIGS:
        raise KeyError(f"unknown configuration {name!r}; known: {', '.join(CONFIG_NAMES)}")
    return _CONFIGS[name]()


def two_classes(config: CurveConfig, i: int = 0, j: int = 0) -> tuple[DivisorClass, DivisorClass]:
    """2 H_i + sum_j E_ij and 2 G_j + sum_i E_ij on the double Kummer pencil."""
    h = {f"H{i}": 2, **{f"E{i}{k}": 1 for k in range(4)}}
    g = {f"G{j}": 2, **{f"E{k}{j}": 1 for k in range(4)}}
    return config.divisor(h), config.divisor(g)


def double_kummer_lattice() -> SpanLattice:
    return span_lattice(curve_config("double_kummer_pencil"))


def inose_spans(config: CurveConfig) -> dict:
    """The three mutually orthogonal pieces on the Inose dual diagram as
    lists of classes: two E8 chains and the hyperbolic pair (section, fiber)."""
    out = {
        "E8_first": [config.curve(c) for c in config.spans["E8_first"]],
        "E8_second": [config.curve(c) for c in config.spans["E8_second"]],
        "H": [config.curve(config.spans["H"]["curve"]), config.fiber(config.spans["H"]["fiber"])],
    }
    return out


def gram_of_classes(classes) -> list[list[int]]:
    return [[a.dot(b) for b in classes] for a in classes]
