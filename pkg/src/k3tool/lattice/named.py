"""Integral lattices given by Gram matrices, and the named lattices used for
K3 surfaces.

Sign convention: root lattices are negative definite (E8 is minus its
Cartan matrix), so roots have norm -2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import DegenerateLattice, IndefiniteLattice, PreconditionError
from . import forms
from .enumerate import vectors_of_norm


@dataclass(frozen=True)
class Lattice:
    gram: tuple
    name: str = ""

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        if any(len(row) != len(g) for row in g):
            raise ValueError("Gram matrix must be square")
        if not forms.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.gram]

    def det(self) -> int:
        return forms.det(self.gram)

    def is_even(self) -> bool:
        return forms.is_even(self.gram)

    def signature(self) -> tuple[int, int, int]:
        return forms.signature(self.gram)

    def is_negative_definite(self) -> bool:
        return self.signature() == (0, self.rank, 0)

    def inner(self, u, v) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, v) -> int:
        return self.inner(v, v)

    def scaled(self, k: int, name: str = "") -> "Lattice":
        return Lattice([[k * x for x in row] for row in self.gram], name or f"{self.name}({k})")

    def __add__(self, other: "Lattice") -> "Lattice":
        return direct_sum(self, other)

    def sublattice(self, basis, name: str = "") -> "Lattice":
        return Lattice(forms.gram_of(forms.as_int_matrix(basis), self.matrix()), name)

    def to_json(self) -> dict:
        return {"name": self.name, "rank": self.rank, "gram": self.matrix()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "Lattice":
        if isinstance(data, str):
            data = json.loads(data)
        lat = cls(data["gram"], data.get("name", ""))
        if lat.rank != data.get("rank", lat.rank):
            raise ValueError("rank field does not match the Gram matrix")
        return lat


def direct_sum(*lats: Lattice, name: str = "") -> Lattice:
    n = sum(l.rank for l in lats)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return Lattice(g, name or "+".join(l.name for l in lats))


def _e8() -> Lattice:
    # Dynkin labelling: chain 0-1-2-3-4-5-6 with node 7 attached to node 2
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    return Lattice(g, "E8")


def _lattice_from_scaled_vectors(rows, scale: int, sign: int, name: str) -> Lattice:
    """Lattice spanned by integer row vectors y under the form
    sign * (y . y') / scale. The basis is the Hermite normal form of the
    generators."""
    basis = forms.hnf(rows)
    g = forms.matmul(basis, forms.transpose(basis))
    out = []
    for row in g:
        out_row = []
        for x in row:
            if (sign * x) % scale:
                raise ValueError("generators do not span an integral lattice")
            out_row.append(sign * x // scale)
        out.append(out_row)
    return Lattice(out, name)


def _d16plus() -> Lattice:
    # coordinates doubled: D16 roots become 2(e_i - e_{i+1}), 2(e_15 + e_16),
    # and the glue (1/2, ..., 1/2) becomes the all-ones vector; form -x.y
    n = 16
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 2, -2
        rows.append(r)
    r = [0] * n
    r[n - 2] = r[n - 1] = 2
    rows.append(r)
    rows.append([1] * n)
    return _lattice_from_scaled_vectors(rows, 4, -1, "D16plus")


def kummer_generators() -> list[list[int]]:
    """Doubled coordinates of generators of the Kummer lattice over the 16
    exceptional classes E_v, v in F_2^4 (index i <-> binary digits of i).
    The half-sums over the all-ones word and the four coordinate
    hyperplane complements generate every affine hyperplane half-sum."""
    n = 16
    rows = []
    for i in range(n):
        r = [0] * n
        r[i] = 2
        rows.append(r)
    rows.append([1] * n)
    for k in range(4):
        rows.append([(i >> k) & 1 for i in range(n)])
    return rows


def _kummer() -> Lattice:
    # E_v . E_w = -2 delta: in doubled coordinates the form is -y.y'/2
    return _lattice_from_scaled_vectors(kummer_generators(), 2, -1, "Kummer")


def _nikulin() -> Lattice:
    # basis F1..F7 and d = (F1 + ... + F8)/2
    g = [[0] * 8 for _ in range(8)]
    for i in range(7):
        g[i][i] = -2
        g[i][7] = g[7][i] = -1
    g[7][7] = -4
    return Lattice(g, "Nikulin")


def nikulin_curve_vectors() -> list[list[int]]:
    """F1..F8 in the basis (F1..F7, d): F8 = 2d - F1 - ... - F7."""
    out = []
    for i in range(7):
        v = [0] * 8
        v[i] = 1
        out.append(v)
    out.append([-1] * 7 + [2])
    return out


H = Lattice([[0, 1], [1, 0]], "H")
H2 = Lattice([[0, 2], [2, 0]], "H2")
E8 = _e8()

_BUILDERS = {
    "H": lambda: H,
    "H2": lambda: H2,
    "E8": lambda: E8,
    "D16plus": _d16plus,
    "Kummer": _kummer,
    "Nikulin": _nikulin,
    "M": lambda: direct_sum(H, E8, E8, name="M"),
    "HH": lambda: direct_sum(H, H, name="HH"),
    "DK_complement": lambda: direct_sum(H2, H2, name="DK_complement"),
}

NAMES = tuple(_BUILDERS)


def named_lattice(name: str) -> Lattice:
    """Look up a named lattice; names are matched case-insensitively."""
    key = {k.lower(): k for k in _BUILDERS}.get(name.lower().replace("-", "_"))
    if key is None:
        raise KeyError(f"unknown lattice {name!r}; known: {', '.join(NAMES)}")
    return _BUILDERS[key]()


def roots(lat: Lattice, backend: str | None = None, max_rank: int = 18) -> list[tuple[int, ...]]:
    """All v with v.v = -2 in a negative definite lattice."""
    if lat.rank > max_rank:
        raise PreconditionError(f"rank {lat.rank} exceeds {max_rank}")
    sig = lat.signature()
    if sig[2]:
        raise DegenerateLattice("Gram matrix is singular")
    if sig[0]:
        raise IndefiniteLattice(f"signature {sig[:2]} is not negative definite")
    pos = [[-x for x in row] for row in lat.gram]
    return vectors_of_norm(pos, 2, backend)


def e8_sum_vs_d16plus(lat: Lattice) -> str:
    """Tell the two even unimodular negative definite rank-16 lattices
    apart: the roots of E8+E8 span a unimodular lattice, those of D16+
    span D16 (determinant 4)."""
    if lat.rank != 16 or abs(lat.det()) != 1 or not lat.is_even():
        raise PreconditionError("expected an even unimodular rank-16 lattice")
    span = forms.hnf([list(r) for r in roots(lat)])
    d = abs(forms.det(forms.gram_of(span, lat.matrix())))
    return {1: "E8+E8", 4: "D16plus"}[d]

