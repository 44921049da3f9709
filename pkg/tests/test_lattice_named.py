from fractions import Fraction

import pytest

from k3tool.errors import DegenerateLattice, IndefiniteLattice, PreconditionError
from k3tool.lattice import (
    E8,
    H,
    H2,
    NAMES,
    Lattice,
    direct_sum,
    discriminant_form,
    e8_sum_vs_d16plus,
    find_isometry,
    is_isometric,
    named_lattice,
    nikulin_curve_vectors,
    roots,
    short_vectors,
    vectors_of_norm,
)

# name: (rank, det, signature, root count or None)
FROZEN = {
    "H": (2, -1, (1, 1, 0), None),
    "H2": (2, -4, (1, 1, 0), None),
    "E8": (8, 1, (0, 8, 0), 240),
    "D16plus": (16, 1, (0, 16, 0), 480),
    "Kummer": (16, 2**6, (0, 16, 0), 32),
    "Nikulin": (8, 2**6, (0, 8, 0), 16),
    "M": (18, -1, (1, 17, 0), None),
    "HH": (4, 1, (2, 2, 0), None),
    "DK_complement": (4, 16, (2, 2, 0), None),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_named_invariants(name):
    lat = named_lattice(name)
    rk, d, sig, _ = FROZEN[name]
    assert (lat.rank, lat.det(), lat.signature()) == (rk, d, sig)
    assert lat.is_even()


@pytest.mark.parametrize("name", [n for n in sorted(FROZEN) if FROZEN[n][3]])
def test_root_counts(name):
    assert len(roots(named_lattice(name))) == FROZEN[name][3]


def test_names_complete():
    assert set(NAMES) == set(FROZEN)
    assert named_lattice("e8") == named_lattice("E8")
    with pytest.raises(KeyError):
        named_lattice("E9")


def test_root_errors():
    with pytest.raises(IndefiniteLattice):
        roots(H2 + H2)
    with pytest.raises(DegenerateLattice):
        roots(Lattice([[-2, -2], [-2, -2]]))
    with pytest.raises(PreconditionError):
        roots(named_lattice("D16plus") + named_lattice("Nikulin"), max_rank=18)


@pytest.mark.parametrize("backend", ["numba", "numpy", "python"])
def test_backends_agree_on_e8(backend):
    g = [[-x for x in row] for row in E8.matrix()]
    vs = vectors_of_norm(g, 2, backend)
    assert len(vs) == 240
    assert set(vs) == {tuple(-c for c in v) for v in vs}


def test_e8_theta_coefficient_norm4():
    g = [[-x for x in row] for row in E8.matrix()]
    assert len(vectors_of_norm(g, 4)) == 2160


def test_short_vectors_without_reduction():
    g = [[2, 1], [1, 2]]
    a = {tuple(v) for v in short_vectors(g, 2, reduce=False).tolist()}
    b = {tuple(v) for v in short_vectors(g, 2).tolist()}
    assert a == b and len(a) == 6


def test_e8_sum_vs_d16plus():
    assert e8_sum_vs_d16plus(E8 + E8) == "E8+E8"
    assert e8_sum_vs_d16plus(named_lattice("D16plus")) == "D16plus"


def test_nikulin_roots_are_the_curves():
    curves = nikulin_curve_vectors()
    assert len(curves) == 8
    expected = {tuple(v) for v in curves} | {tuple(-x for x in v) for v in curves}
    assert set(roots(named_lattice("Nikulin"))) == expected


def test_json_roundtrip():
    lat = named_lattice("Kummer")
    again = Lattice.from_json(lat.to_json())
    assert again.matrix() == lat.matrix()
    assert '"rank": 16' in lat.dumps()


def test_lattice_validation():
    with pytest.raises(ValueError):
        Lattice([[1, 2], [3, 4]])


def test_direct_sum_block_diagonal():
    s = direct_sum(H, E8, name="x")
    assert s.rank == 10 and s.det() == -1
    assert s.matrix()[0][2:] == [0] * 8


def test_discriminant_forms_of_kummer_and_nikulin():
    target = discriminant_form(H2 + H2 + H2)
    for name in ("Kummer", "Nikulin"):
        d = discriminant_form(named_lattice(name))
        assert d.invariant_factors == (2,) * 6 or list(d.invariant_factors) == [2] * 6
        assert is_isometric(d, target)
        assert dict(d.q_multiset()) == {Fraction(0): 36, Fraction(1): 28}


def test_unimodular_has_trivial_discriminant():
    assert discriminant_form(E8).order == 1
    assert discriminant_form(named_lattice("D16plus")).order == 1


def test_non_isometric_forms():
    a1 = Lattice([[-2]])
    a1p = Lattice([[2]])
    assert not is_isometric(discriminant_form(a1 + a1), discriminant_form(H2))
    assert not is_isometric(discriminant_form(a1), discriminant_form(a1p))
    assert find_isometry(discriminant_form(a1), discriminant_form(a1)) is not None


def test_d4_pair_matches_hyperbolic_pair():
    d4 = Lattice([[-2, 1, 0, 0], [1, -2, 1, 1], [0, 1, -2, 0], [0, 1, 0, -2]])
    assert is_isometric(discriminant_form(d4 + d4), discriminant_form(H2 + H2))


def test_discriminant_identities():
    d = discriminant_form(H2)
    for x in d.elements():
        for y in d.elements():
            assert d.b(x, y) == d.b(y, x)
            s = tuple((u + v) % 2 for u, v in zip(x, y))
            diff = d.q(s) - d.q(x) - d.q(y) - 2 * d.b(x, y)
            assert diff.denominator == 1 and diff.numerator % 2 == 0
