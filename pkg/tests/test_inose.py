from fractions import Fraction

import mpmath
import pytest
import sympy as sp
from hypothesis import given

from strategies import rationals
from k3tool.errors import PreconditionError
from k3tool.exact import BigComplex, QuadExtElement, RationalFunction, rational_function_equal
from k3tool.inose import (
    InoseContext,
    InoseParams,
    RadicalParams,
    fiber_cubic,
    fiber_cubic_by_substitution,
    fiber_involution,
    from_j_pair,
    involution_beta,
    j_pair,
    modular_invariants,
    predicted_finite_fibers,
    predicted_infinity_fiber,
    psi2_fiber_case,
    psi2_j,
    psi2_j_closed_form,
    psi2_weierstrass,
    quotient_substitution_check,
    singular_points_check,
    theta2_fiber_case,
    theta2_j,
    theta2_j_closed_form,
    theta2_weierstrass,
    weierstrass_transform_check,
)
from k3tool.weierstrass import discriminant, euler_sum, fiber_multiset, full_fiber_table

t = sp.Symbol("t")


def _sympy_J(a2, a4, a6):
    """J = j / 1728 for y^2 = x^3 + a2 x^2 + a4 x + a6 (Tate's b/c quantities)."""
    b2, b4, b6 = 4 * a2, 2 * a4, 4 * a6
    b8 = 4 * a2 * a6 - a4**2
    c4 = b2**2 - 24 * b4
    delta = -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6
    return sp.cancel(c4**3 / delta / 1728)


def _as_sympy(rf: RationalFunction):
    num = sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(rf.num))
    den = sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(rf.den))
    return sp.cancel(num / den)


def _p_sym(a, b):
    return 4 * t**3 - 3 * sp.Rational(a) * t - sp.Rational(b)


AB = [(0, 0), (1, 0), (4, 7), (Fraction(2, 3), Fraction(-5, 7)), (-3, 2)]


@pytest.mark.parametrize("a,b", AB)
def test_theta2_j_against_independent_cubic(a, b):
    # affine fiber 2 z y^2 = 2 P z + z^2 + 1, i.e. Y^2 = x^3 + 4P x^2 + 4x with x = 2z, Y = 2yz
    p = _p_sym(a, b)
    oracle = _sympy_J(4 * p, 4, 0)
    ctx = InoseContext.make(a, b)
    assert sp.simplify(_as_sympy(theta2_j(ctx)) - oracle) == 0
    assert rational_function_equal(theta2_j(ctx), theta2_j_closed_form(ctx))


@pytest.mark.parametrize("a,b", AB)
def test_psi2_j_against_quotient_curve(a, b):
    # quotient fiber v^2 = (u + P)(u - 1)(u + 1)
    p = _p_sym(a, b)
    oracle = _sympy_J(p, -1, -p)
    ctx = InoseContext.make(a, b)
    assert sp.simplify(_as_sympy(psi2_j(ctx)) - oracle) == 0
    assert rational_function_equal(psi2_j(ctx), psi2_j_closed_form(ctx))


@given(rationals(10**6), rationals(10**6))
def test_invariants_headline(a, b):
    ctx = InoseContext.make(a, b)
    inv = modular_invariants(ctx)
    assert inv.pi == a**3 and inv.sigma == a**3 - b**2 + 1
    jp = j_pair(ctx)
    assert jp.j1 + jp.j2 == inv.sigma and jp.j1 * jp.j2 == inv.pi


@given(rationals(40), rationals(40))
def test_discriminant_identities(a, b):
    ctx = InoseContext.make(a, b)
    p2 = ctx.p_poly * ctx.p_poly
    assert discriminant(theta2_weierstrass(ctx)) == (1 - p2) * 4
    assert discriminant(psi2_weierstrass(ctx)) == (p2 - 1) ** 2 * (-4)


def test_frozen_j_pairs():
    assert j_pair(InoseContext.make(4, 7)).as_set() == {8}
    jp = j_pair(InoseContext.make(2, 1))
    assert jp.as_set() == {QuadExtElement(4, 2, 2), QuadExtElement(4, -2, 2)}
    assert j_pair(InoseContext.make(1, 0)).as_set() == {1}


def test_from_j_pair_roundtrip():
    assert from_j_pair(Fraction(8), Fraction(8)) == [InoseParams(4, 7), InoseParams(4, -7)]
    assert from_j_pair(Fraction(1), Fraction(1)) == [InoseParams(1, 0)]
    rad = from_j_pair(Fraction(2), Fraction(3))
    assert len(rad) == 1 and isinstance(rad[0], RadicalParams)
    assert rad[0].a_cubed == 6 and rad[0].b_squared == 2
    sols = rad[0].numeric_solutions(128)
    assert len(sols) == 6
    for s in sols:
        with mpmath.workprec(128):
            assert abs(s.a.value**3 - 6) < 1e-30 and abs(s.b.value**2 - 2) < 1e-30


def test_numeric_from_j_pair():
    sols = from_j_pair(BigComplex.make(8), BigComplex.make(8))
    assert len(sols) == 6
    assert any(abs(complex(s.a) - 4) < 1e-25 and abs(complex(s.b) - 7) < 1e-25 for s in sols)


def test_mixed_params_rejected():
    with pytest.raises(PreconditionError):
        InoseParams(Fraction(1), BigComplex.make(1))


CASES = [
    ((0, 0), "generic", {"I1": 6}),
    ((4, 7), "tangent_plus", {"I2": 1, "I1": 4}),
    ((4, -9), "tangent_plus", {"I2": 1, "I1": 4}),
    ((4, 9), "tangent_minus", {"I2": 1, "I1": 4}),
    ((0, 1), "a0_bpm1", {"I3": 1, "I1": 3}),
    ((0, -1), "a0_bpm1", {"I3": 1, "I1": 3}),
    ((1, 0), "a3_1_b0", {"I2": 2, "I1": 2}),
]


@pytest.mark.parametrize("ab,tag,finite", CASES)
def test_fiber_cases(ab, tag, finite):
    ctx = InoseContext.make(*ab)
    assert theta2_fiber_case(ctx) == tag == psi2_fiber_case(ctx)
    assert predicted_finite_fibers(tag) == finite
    for name, build in (("theta2", theta2_weierstrass), ("psi2", psi2_weierstrass)):
        table = full_fiber_table(build(ctx))
        expected = predicted_finite_fibers(tag, name)
        expected[predicted_infinity_fiber(name).label] = 1
        assert fiber_multiset(table) == expected
        assert euler_sum(table) == 24


@pytest.mark.parametrize("lam", [0, 2, Fraction(-1, 3), Fraction(5, 4)])
@pytest.mark.parametrize("a,b", AB[:4])
def test_fiber_cubic_geometry(a, b, lam):
    ctx = InoseContext.make(a, b)
    assert fiber_cubic(ctx, lam) == fiber_cubic_by_substitution(ctx, lam)
    assert weierstrass_transform_check(ctx, lam)
    _, cert = fiber_involution(ctx, lam)
    assert not cert["square_factor"].is_zero()
    p = ctx.p_poly(Fraction(lam))
    if p * p != 1:
        assert quotient_substitution_check(ctx, lam)


def test_involution_and_singular_points():
    ctx = InoseContext.make(Fraction(3, 2), -4)
    _, cert = involution_beta(ctx)
    assert cert["quartic_factor"].degree() == 4
    assert all(singular_points_check(ctx).values())


def test_quotient_check_singular_fiber_rejected():
    ctx = InoseContext.make(0, 0)
    lam = Fraction(1, 2)  # P = 4/8 = 1/2; pick one with P = 1 instead
    with pytest.raises(PreconditionError):
        quotient_substitution_check(InoseContext.make(0, 3), 1)
    assert quotient_substitution_check(ctx, lam)
