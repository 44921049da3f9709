from fractions import Fraction

import pytest
from hypothesis import assume, given

from strategies import rationals
from k3tool.errors import DegenerateLegendre, SingularConic
from k3tool.exact import rational_function_equal
from k3tool.exact.roots import squarefree_decompose
from k3tool.kummer import (
    LegendrePair,
    branch_points_coincide,
    conic_is_singular,
    conic_poly,
    cross_ratio_from_branch_points,
    j_of_cross_ratio,
    kummer_quartic,
    legendre_j,
    legendre_orbit,
    singularity_report,
    sixth_root_of_unity,
    upsilon2_branch_points,
    upsilon2_cross_ratio,
    upsilon2_data,
    upsilon2_euler_sum,
    upsilon2_fiber_cases,
    upsilon2_functional_invariant,
    upsilon2_functional_invariant_printed,
    upsilon2_j_via_cross_ratio,
)

PAIRS = [(2, 3), (5, Fraction(-7, 2)), (-2, Fraction(7, 3)), (Fraction(3, 5), 4)]


def test_legendre_j_special_values():
    assert legendre_j(-1) == 1
    assert legendre_j(2) == 1
    assert legendre_j(Fraction(1, 2)) == 1
    assert legendre_j(sixth_root_of_unity()) == 0
    assert legendre_j(3) == Fraction(343, 243)
    with pytest.raises(DegenerateLegendre):
        legendre_j(1)
    with pytest.raises(DegenerateLegendre):
        LegendrePair(0, 2)


@given(rationals(30, nonzero=True))
def test_orbit_has_constant_j(lam):
    assume(lam != 1)
    orbit = legendre_orbit(lam)
    assert len({legendre_j(x) for x in orbit}) == 1


@pytest.mark.parametrize("ab", PAIRS)
def test_singular_points(ab):
    rep = singularity_report(LegendrePair(*ab))
    assert all(rep["A3_singular"]) and all(rep["A1_singular"]) and all(rep["A1_hessian_nonzero"])


@pytest.mark.parametrize("ab", PAIRS)
def test_functional_invariant_two_ways(ab):
    pair = LegendrePair(*ab)
    closed = upsilon2_functional_invariant(pair)
    assert rational_function_equal(closed, upsilon2_j_via_cross_ratio(pair))
    assert not rational_function_equal(upsilon2_functional_invariant_printed(pair), closed)


@pytest.mark.parametrize("ab", PAIRS)
@pytest.mark.parametrize("mu", [3, Fraction(-2, 5), Fraction(7, 3)])
def test_cross_ratio_from_geometry(ab, mu):
    pair = LegendrePair(*ab)
    if conic_is_singular(pair, mu) or branch_points_coincide(pair, mu):
        pytest.skip("degenerate fiber")
    conic = conic_poly(pair, mu)
    for pt in upsilon2_branch_points(pair, mu):
        assert conic(*pt) == 0
    r_geo = cross_ratio_from_branch_points(pair, mu)
    assert j_of_cross_ratio(r_geo) == j_of_cross_ratio(upsilon2_cross_ratio(pair, mu))
    assert j_of_cross_ratio(r_geo) == upsilon2_functional_invariant(pair)(Fraction(mu))


def test_singular_conic_rejected():
    pair = LegendrePair(2, 3)
    d = upsilon2_data(pair)
    mu = d.d1_roots[0]
    assert conic_is_singular(pair, mu) or branch_points_coincide(pair, mu)
    if conic_is_singular(pair, mu):
        with pytest.raises(SingularConic):
            upsilon2_branch_points(pair, mu)


def test_sigma_equals_roots_of_d():
    pair = LegendrePair(2, 3)
    d = upsilon2_data(pair)
    assert sorted(d.d1_roots) == [Fraction(1, 6), Fraction(5, 6), 1]
    for v, _ in d.sigma_upsilon:
        assert d.d_poly(v) == 0
    assert sorted(v for v, _ in d.sigma_upsilon) == sorted(d.d1_roots + d.d2_roots)


@pytest.mark.parametrize(
    "ab,tag,fibers",
    [
        ((2, 3), "a", {"I2": 6}),
        ((3, Fraction(1, 3)), "b", {"I4": 1, "I2": 4}),
        ((2, Fraction(1, 2)), "c", {"I4": 2, "I2": 2}),
    ],
)
def test_upsilon_cases(ab, tag, fibers):
    case = upsilon2_fiber_cases(LegendrePair(*ab))
    assert case.tag == tag and case.fibers == fibers and case.consistent
    assert upsilon2_euler_sum(case) == 24


def test_upsilon_case_d():
    w = sixth_root_of_unity()
    case = upsilon2_fiber_cases(LegendrePair(w, w))
    assert case.tag == "d" and case.consistent
    assert case.fibers == {"I6": 1, "I2": 3}
    assert upsilon2_euler_sum(case) == 24


@given(rationals(12, nonzero=True), rationals(12, nonzero=True))
def test_d_multiplicities_match_case(a, b):
    assume(a != 1 and b != 1)
    pair = LegendrePair(a, b)
    case = upsilon2_fiber_cases(pair)
    assert case.consistent
    mults = squarefree_decompose(upsilon2_data(pair).d_poly).multiplicities()
    assert sum(mults) == 6


def test_kummer_quartic_degree():
    f = kummer_quartic(LegendrePair(2, 3))
    assert f.is_homogeneous() and f.degree() == 4
