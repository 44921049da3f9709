"""The Inose family X(a, b).

X(a, b) is the minimal resolution of the quartic

    y^2 z w - 4 x^3 z + 3 a x z w^2 - (z^2 w^2 + w^4)/2 + b z w^3 = 0.

Projecting to [x, w] gives the elliptic fibration Theta2; its quotient by
the fiberwise translation by a 2-torsion section gives Psi2 on the Kummer
side. Both have Weierstrass data built from P(X) = 4X^3 - 3aX - b.

Exact mode works over Q (Fractions). Numeric mode takes BigComplex
parameters and covers the invariant computations only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .errors import InvolutionCheckFailed, PreconditionError
from .exact import BigComplex, MPoly, Polynomial, QuadExtElement, RationalFunction, rational_nth_root
from .exact.bigcomplex import DEFAULT_PREC
from .exact.quadext import canonical_radicand
from .weierstrass import KodairaType, WeierstrassFibration, functional_invariant

Scalar = Union[Fraction, BigComplex]

NUMERIC_TOL = mpmath.mpf(2) ** -64


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction))


@dataclass(frozen=True)
class InoseParams:
    a: Scalar
    b: Scalar

    def __post_init__(self):
        exact = [_is_exact(self.a), _is_exact(self.b)]
        if all(exact):
            object.__setattr__(self, "a", Fraction(self.a))
            object.__setattr__(self, "b", Fraction(self.b))
        elif any(exact) or not all(isinstance(v, BigComplex) for v in (self.a, self.b)):
            raise PreconditionError("a and b must both be rational or both BigComplex")

    @property
    def exact(self) -> bool:
        return isinstance(self.a, Fraction)


@dataclass(frozen=True)
class InoseContext:
    params: InoseParams
    p_poly: Polynomial

    @classmethod
    def make(cls, a, b) -> "InoseContext":
        params = a if isinstance(a, InoseParams) else InoseParams(a, b)
        p = Polynomial([-params.b, -3 * params.a, 0, 4])
        return cls(params, p)

    @property
    def a(self):
        return self.params.a

    @property
    def b(self):
        return self.params.b


def context(a, b=None) -> InoseContext:
    return InoseContext.make(a, b)


@dataclass(frozen=True)
class ModularInvariants:
    pi: Scalar
    sigma: Scalar


@dataclass(frozen=True)
class JPair:
    """Unordered pair {j1, j2}."""

    j1: object
    j2: object

    def __eq__(self, other):
        if not isinstance(other, JPair):
            return NotImplemented
        return (self.j1 == other.j1 and self.j2 == other.j2) or (
            self.j1 == other.j2 and self.j2 == other.j1
        )

    def __hash__(self):
        return hash(frozenset((hash(self.j1), hash(self.j2))))

    def as_set(self) -> set:
        return {self.j1, self.j2}


@dataclass(frozen=True)
class ProjectiveMap:
    name: str
    components: tuple

    def __post_init__(self):
        degs = {c.degree() for c in self.components if not c.is_zero()}
        if len(degs) > 1 or not all(c.is_homogeneous() for c in self.components):
            raise ValueError("components must be homogeneous of one degree")

    def compose(self, inner: "ProjectiveMap") -> "ProjectiveMap":
        """self after inner."""
        return ProjectiveMap(
            f"{self.name}*{inner.name}",
            tuple(c.substitute(inner.components) for c in self.components),
        )

    def pullback(self, f: MPoly) -> MPoly:
        return f.substitute(self.components)


# -- invariants -------------------------------------------------------------


def modular_invariants(ctx: InoseContext) -> ModularInvariants:
    a, b = ctx.a, ctx.b
    return ModularInvariants(pi=a**3, sigma=a**3 - b**2 + 1)


def j_pair(ctx: InoseContext) -> JPair:
    """Roots of x^2 - sigma x + pi."""
    inv = modular_invariants(ctx)
    return j_pair_from_invariants(inv.pi, inv.sigma)


def j_pair_from_invariants(pi, sigma) -> JPair:
    if isinstance(pi, BigComplex) or isinstance(sigma, BigComplex):
        prec = min(v.precision_bits for v in (pi, sigma) if isinstance(v, BigComplex))
        with mpmath.workprec(prec):
            p, s = BigComplex.make(pi, prec).value, BigComplex.make(sigma, prec).value
            r = mpmath.sqrt(s * s - 4 * p)
            return JPair(BigComplex.make((s + r) / 2, prec), BigComplex.make((s - r) / 2, prec))
    pi, sigma = Fraction(pi), Fraction(sigma)
    root = QuadExtElement.sqrt(sigma * sigma - 4 * pi)
    half = Fraction(1, 2)
    return JPair((root + sigma) * half, (-root + sigma) * half)


@dataclass(frozen=True)
class RadicalParams:
    """All (a, b) with a^3 = a_cubed and b^2 = b_squared, kept exact when
    they are not rational."""

    a_cubed: Fraction
    b_squared: Fraction

    @property
    def rational_a(self):
        return rational_nth_root(self.a_cubed, 3)

    @property
    def b_radicand(self) -> tuple[int, Fraction]:
        """(r, s) with b = +-s*sqrt(r)."""
        return canonical_radicand(self.b_squared)

    def numeric_solutions(self, precision_bits: int = DEFAULT_PREC) -> list[InoseParams]:
        out = []
        with mpmath.workprec(precision_bits):
            ac = mpmath.mpf(self.a_cubed.numerator) / self.a_cubed.denominator
            bs = mpmath.mpf(self.b_squared.numerator) / self.b_squared.denominator
            a0 = mpmath.cbrt(ac) if ac >= 0 else -mpmath.cbrt(-ac)
            b0 = mpmath.sqrt(mpmath.mpc(bs))
            for k in range(3):
                a = a0 * mpmath.expjpi(mpmath.mpf(2 * k) / 3)
                for sb in (1, -1):
                    out.append(InoseParams(BigComplex.make(a, precision_bits), BigComplex.make(sb * b0, precision_bits)))
        return out


def from_j_pair(j1, j2, precision_bits: int = DEFAULT_PREC) -> list:
    """All (a, b) with a^3 = j1 j2 and b^2 = (j1 - 1)(j2 - 1).

    Exact input: the rational solutions as InoseParams (at most two, the
    real cube root with both signs of b) when they exist, else a single
    RadicalParams record. Numeric input: all six complex solutions.
    """
    if isinstance(j1, BigComplex) or isinstance(j2, BigComplex):
        with mpmath.workprec(precision_bits):
            x1, x2 = BigComplex.make(j1, precision_bits).value, BigComplex.make(j2, precision_bits).value
            ac, bs = x1 * x2, (x1 - 1) * (x2 - 1)
            a0 = mpmath.root(ac, 3) if ac != 0 else mpmath.mpc(0)
            b0 = mpmath.sqrt(bs)
            out = []
            for k in range(3):
                a = a0 * mpmath.expjpi(mpmath.mpf(2 * k) / 3)
                for sb in (1, -1):
                    out.append(InoseParams(BigComplex.make(a, precision_bits), BigComplex.make(sb * b0, precision_bits)))
            return out
    pi = j1 * j2
    bsq = (j1 - 1) * (j2 - 1)
    pi, bsq = _rationalize(pi), _rationalize(bsq)
    a = rational_nth_root(pi, 3)
    r, s = canonical_radicand(bsq)
    if a is not None and r == 1:
        return [InoseParams(a, s)] if s == 0 else [InoseParams(a, s), InoseParams(a, -s)]
    return [RadicalParams(pi, bsq)]


def _rationalize(v) -> Fraction:
    if isinstance(v, QuadExtElement):
        if not v.is_rational():
            raise PreconditionError("j1 and j2 must have rational symmetric functions")
        return v.base
    return Fraction(v)


# -- fibrations ----------------------------------------------------------------


def theta2_weierstrass(ctx: InoseContext) -> WeierstrassFibration:
    """g2 = 1 - 4P^2/3, g3 = 16P^3/27 - 2P/3."""
    p = ctx.p_poly
    g2 = Polynomial([1]) - p * p * Fraction(4, 3)
    g3 = p**3 * Fraction(16, 27) - p * Fraction(2, 3)
    return WeierstrassFibration(g2, g3)


def psi2_weierstrass(ctx: InoseContext) -> WeierstrassFibration:
    """g2 = -(P^2/3 + 1), g3 = 2P^3/27 - 2P/3."""
    p = ctx.p_poly
    g2 = -(p * p * Fraction(1, 3) + 1)
    g3 = p**3 * Fraction(2, 27) - p * Fraction(2, 3)
    return WeierstrassFibration(g2, g3)


def theta2_j_closed_form(ctx: InoseContext) -> RationalFunction:
    """(3 - 4P^2)^3 / (27 (1 - P^2))."""
    p2 = ctx.p_poly * ctx.p_poly
    return RationalFunction((Polynomial([3]) - p2 * 4) ** 3, (Polynomial([1]) - p2) * 27)


def psi2_j_closed_form(ctx: InoseContext) -> RationalFunction:
    """(P^2 + 3)^3 / (27 (P^2 - 1)^2)."""
    p2 = ctx.p_poly * ctx.p_poly
    return RationalFunction((p2 + 3) ** 3, (p2 - 1) ** 2 * 27)


def theta2_j(ctx: InoseContext) -> RationalFunction:
    return functional_invariant(theta2_weierstrass(ctx))


def psi2_j(ctx: InoseContext) -> RationalFunction:
    return functional_invariant(psi2_weierstrass(ctx))


CASE_TAGS = ("generic", "tangent_plus", "tangent_minus", "a0_bpm1", "a3_1_b0")

# finite Kodaira multisets of Theta2 per case; Psi2 doubles every index
_THETA2_FINITE = {
    "generic": {"I1": 6},
    "tangent_plus": {"I2": 1, "I1": 4},
    "tangent_minus": {"I2": 1, "I1": 4},
    "a0_bpm1": {"I3": 1, "I1": 3},
    "a3_1_b0": {"I2": 2, "I1": 2},
}


def _case_tag(ctx: InoseContext) -> str:
    if not ctx.params.exact:
        raise PreconditionError("case detection needs rational (a, b)")
    a, b = ctx.a, ctx.b
    if a**3 == 1 and b == 0:
        return "a3_1_b0"
    if a == 0 and b in (1, -1):
        return "a0_bpm1"
    if a**3 == (b + 1) ** 2:
        return "tangent_plus"
    if a**3 == (b - 1) ** 2:
        return "tangent_minus"
    return "generic"


def theta2_fiber_case(ctx: InoseContext) -> str:
    return _case_tag(ctx)


def psi2_fiber_case(ctx: InoseContext) -> str:
    return _case_tag(ctx)


def predicted_finite_fibers(tag: str, fibration: str = "theta2") -> dict[str, int]:
    base = _THETA2_FINITE[tag]
    if fibration == "theta2":
        return dict(base)
    return {f"I{2 * int(k[1:])}": v for k, v in base.items()}


def predicted_infinity_fiber(fibration: str = "theta2") -> KodairaType:
    return KodairaType("I*", 12 if fibration == "theta2" else 6)


# -- quartic geometry ------------------------------------------------------------

_X, _Y, _Z, _W = MPoly.gens(4)


def inose_quartic(ctx: InoseContext) -> MPoly:
    a, b = ctx.a, ctx.b
    return (
        _Y**2 * _Z * _W
        - 4 * _X**3 * _Z
        + 3 * a * _X * _Z * _W**2
        - Fraction(1, 2) * (_Z**2 * _W**2 + _W**4)
        + b * _Z * _W**3
    )


def fiber_cubic(ctx: InoseContext, lam) -> MPoly:
    """Fiber of Theta2 over [lam, 1] in P^2(y, z, w):
    2y^2 z - 2P(lam) z w^2 - z^2 w - w^3, obtained from the quartic by
    x = lam w and clearing the factor w/2."""
    y, z, w = MPoly.gens(3)
    pl = ctx.p_poly(Fraction(lam))
    return 2 * y**2 * z - 2 * pl * z * w**2 - z**2 * w - w**3


def fiber_cubic_by_substitution(ctx: InoseContext, lam) -> MPoly:
    """Substitute x = lam w into the quartic and strip the factor w / 2."""
    y, z, w = MPoly.gens(3)
    q = inose_quartic(ctx).substitute([Fraction(lam) * w, y, z, w])
    return q.divide_exact(MPoly(3, {(0, 0, 1): Fraction(1, 2)}))


def involution_beta(ctx: InoseContext, check: bool = True) -> tuple[ProjectiveMap, dict]:
    """beta1 [x, y, z, w] -> [xz, -yz, w^2, zw] with a certificate."""
    beta = ProjectiveMap("beta1", (_X * _Z, -_Y * _Z, _W**2, _Z * _W))
    cert = {}
    if check:
        q = inose_quartic(ctx)
        pulled = beta.pullback(q)
        m_exp = pulled.monomial_gcd()
        m = MPoly(4, {m_exp: 1})
        residual = pulled - m * q
        if not residual.is_zero():
            raise InvolutionCheckFailed("quartic is not preserved by beta1", residual)
        sq = beta.compose(beta)
        factor = _common_factor(sq.components, (_X, _Y, _Z, _W))
        if factor is None:
            raise InvolutionCheckFailed("beta1 o beta1 is not the identity", sq.components)
        cert = {"quartic_factor": m, "square_factor": factor}
    return beta, cert


def _common_factor(components, coords):
    """f with components[i] = f * coords[i] for all i, or None."""
    try:
        quotients = [c.divide_exact(v) for c, v in zip(components, coords)]
    except ArithmeticError:
        return None
    first = quotients[0]
    return first if all(q == first for q in quotients) else None


def fiber_involution(ctx: InoseContext, lam) -> tuple[ProjectiveMap, dict]:
    """[y, z, w] -> [-yz, w^2, zw] on the fiber cubic, with certificate."""
    y, z, w = MPoly.gens(3)
    f = ProjectiveMap("beta_fiber", (-y * z, w**2, z * w))
    c = fiber_cubic(ctx, lam)
    pulled = f.pullback(c)
    m = MPoly(3, {pulled.monomial_gcd(): 1})
    residual = pulled - m * c
    if not residual.is_zero():
        raise InvolutionCheckFailed("fiber cubic is not preserved", residual)
    factor = _common_factor(f.compose(f).components, (y, z, w))
    if factor is None:
        raise InvolutionCheckFailed("fiber map does not square to the identity")
    return f, {"cubic_factor": m, "square_factor": factor}


def weierstrass_transform_check(ctx: InoseContext, lam, samples=(2, 3, -5, Fraction(1, 7))) -> bool:
    """Points of the affine fiber (w = 1) map to Y^2 = Z^3 + g2 Z + g3 via
    Y = sqrt(2) y z, Z = z + 2P/3."""
    lam = Fraction(lam)
    pl = ctx.p_poly(lam)
    fib = theta2_weierstrass(ctx)
    g2, g3 = fib.g2(lam), fib.g3(lam)
    for z in samples:
        z = Fraction(z)
        y2 = pl + (z * z + 1) / (2 * z)
        big_y2 = 2 * y2 * z * z
        big_z = z + 2 * pl / 3
        if big_y2 != big_z**3 + g2 * big_z + g3:
            return False
    return True


def quotient_substitution_check(ctx: InoseContext, lam, samples=(2, 3, -5, Fraction(1, 7), Fraction(-9, 4))) -> bool:
    """u = y^2 - P, v = y (z - 1/z)/2 satisfy v^2 = (u + P)(u - 1)(u + 1)
    at points of the affine fiber cubic (w = 1), with y taken in a
    quadratic extension when needed."""
    if isinstance(lam, BigComplex):
        return _quotient_check_numeric(ctx, lam)
    lam = Fraction(lam)
    pl = ctx.p_poly(lam)
    if pl * pl == 1:
        raise PreconditionError("P(lam)^2 = 1: the fiber is singular")
    cubic = fiber_cubic(ctx, lam)
    for z in samples:
        z = Fraction(z)
        y = QuadExtElement.sqrt(pl + (z * z + 1) / (2 * z))
        if cubic(y, QuadExtElement(z), QuadExtElement(1)) != 0:
            return False
        u = y * y - pl
        v = y * (z - 1 / z) * Fraction(1, 2)
        if v * v - (u + pl) * (u - 1) * (u + 1) != 0:
            return False
    return True


def _quotient_check_numeric(ctx: InoseContext, lam: BigComplex) -> bool:
    prec = lam.precision_bits
    with mpmath.workprec(prec):
        l = lam.value
        pl = 4 * l**3 - 3 * _num(ctx.a, prec) * l - _num(ctx.b, prec)
        if abs(pl * pl - 1) < NUMERIC_TOL:
            raise PreconditionError("P(lam)^2 = 1: the fiber is singular")
        for z in (mpmath.mpf(2), mpmath.mpf(3), mpmath.mpc(1, 2)):
            y = mpmath.sqrt(pl + (z * z + 1) / (2 * z))
            u = y * y - pl
            v = y * (z - 1 / z) / 2
            if abs(v * v - (u + pl) * (u * u - 1)) > NUMERIC_TOL * (1 + abs(u) ** 3):
                return False
    return True


def _num(v, prec):
    return BigComplex.make(v, prec).value


def singular_points_check(ctx: InoseContext) -> dict[str, bool]:
    """Quartic and its gradient vanish at [0,1,0,0] and [0,0,1,0]."""
    q = inose_quartic(ctx)
    grad = q.gradient()
    out = {}
    for label, pt in (("[0,1,0,0]", (0, 1, 0, 0)), ("[0,0,1,0]", (0, 0, 1, 0))):
        out[label] = q(*pt) == 0 and all(g(*pt) == 0 for g in grad)
    return out
