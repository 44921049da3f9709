"""Kummer surfaces Km(E1 x E2) of products of Legendre curves.

E1, E2 are y^2 w = x (x - w)(x - lambda w) with lambda = alpha, beta. The
Kummer surface is the resolution of the quartic

    z^2 x y = (x - w)(x - alpha w)(y - w)(y - beta w)

and [x, y, z, w] -> [R(x, y, w), x y] is the jacobian fibration Upsilon2.
Its fiber over [mu, 1] is a double cover of the conic R = mu x y branched at
four points, and its singular fibers sit over the roots of the sextic D(mu).

Parameters may be Fractions or, where only ring arithmetic is needed,
QuadExtElements (e.g. the J = 0 curve, alpha^2 - alpha + 1 = 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateLegendre, PreconditionError, SingularConic
from .exact import MPoly, Polynomial, QuadExtElement, RationalFunction, squarefree_decompose
from .weierstrass import KodairaType


def _norm(v):
    return Fraction(v) if isinstance(v, int) else v


@dataclass(frozen=True)
class LegendrePair:
    alpha: object
    beta: object

    def __post_init__(self):
        a, b = _norm(self.alpha), _norm(self.beta)
        for v in (a, b):
            if v == 0 or v == 1:
                raise DegenerateLegendre(f"Legendre parameter {v} must avoid 0 and 1")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def rational(self) -> bool:
        return isinstance(self.alpha, Fraction) and isinstance(self.beta, Fraction)


def legendre_j(lam):
    """4 (l^2 - l + 1)^3 / (27 l^2 (l - 1)^2), so J = 1 at l = -1 and J = 0
    at the primitive sixth roots of unity."""
    lam = _norm(lam)
    if lam == 0 or lam == 1:
        raise DegenerateLegendre(f"Legendre parameter {lam} must avoid 0 and 1")
    return 4 * (lam * lam - lam + 1) ** 3 / (27 * lam * lam * (lam - 1) ** 2)


def legendre_orbit(lam) -> set:
    """The anharmonic orbit of lam; all members have the same J."""
    lam = _norm(lam)
    if lam == 0 or lam == 1:
        raise DegenerateLegendre(f"Legendre parameter {lam} must avoid 0 and 1")
    one = lam * 0 + 1
    return {lam, one / lam, one - lam, one / (one - lam), lam / (lam - 1), (lam - 1) / lam}


# -- quartic model ------------------------------------------------------------


def kummer_quartic(pair: LegendrePair) -> MPoly:
    """z^2 x y - (x - w)(x - alpha w)(y - w)(y - beta w)."""
    x, y, z, w = MPoly.gens(4)
    a, b = pair.alpha, pair.beta
    return z**2 * x * y - (x - w) * (x - a * w) * (y - w) * (y - b * w)


def kummer_singular_points(pair: LegendrePair) -> dict[str, list[tuple]]:
    a, b = pair.alpha, pair.beta
    return {
        "A3": [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)],
        "A1": [(1, 1, 0, 1), (a, 1, 0, 1), (1, b, 0, 1), (a, b, 0, 1)],
    }


def is_singular_point(f: MPoly, pt) -> bool:
    return f(*pt) == 0 and all(g(*pt) == 0 for g in f.gradient())


def affine_hessian_det(f: MPoly, pt):
    """Determinant of the Hessian of f(x, y, z, 1) at an affine point
    (pt[3] = 1)."""
    if pt[3] != 1:
        raise PreconditionError("expected a point in the chart w = 1")
    h = [[f.diff(i).diff(j)(*pt) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


def singularity_report(pair: LegendrePair) -> dict:
    """Gradient check at all seven points and a nondegenerate Hessian at the
    four A1 points."""
    f = kummer_quartic(pair)
    pts = kummer_singular_points(pair)
    return {
        "A3_singular": [is_singular_point(f, p) for p in pts["A3"]],
        "A1_singular": [is_singular_point(f, p) for p in pts["A1"]],
        "A1_hessian_nonzero": [affine_hessian_det(f, p) != 0 for p in pts["A1"]],
    }


# -- the fibration Upsilon2 ---------------------------------------------------------


@dataclass(frozen=True)
class KummerFibrationContext:
    pair: LegendrePair
    d_poly: Polynomial
    d1: Polynomial
    d2: Polynomial
    d1_roots: tuple
    d2_roots: tuple
    sigma_upsilon: tuple  # ((value, multiplicity), ...)


def _merge(values) -> tuple:
    out: list[list] = []
    for v in values:
        for entry in out:
            if entry[0] == v:
                entry[1] += 1
                break
        else:
            out.append([v, 1])
    return tuple((v, m) for v, m in out)


def upsilon2_data(pair: LegendrePair) -> KummerFibrationContext:
    a, b = pair.alpha, pair.beta
    ab = a * b
    one = ab * 0 + 1
    r1 = (one, one / ab, (a + b) / ab)
    r2 = (one / a, one / b, (ab + 1) / ab)
    d1 = Polynomial.from_roots(r1)
    d2 = Polynomial.from_roots(r2)
    return KummerFibrationContext(pair, d1 * d2, d1, d2, r1, r2, _merge(r1 + r2))


def elementary_symmetric(cubic: Polynomial) -> tuple:
    """(e1, e2, e3) of the roots of a monic cubic."""
    if cubic.degree != 3 or cubic.lead != 1:
        raise PreconditionError("expected a monic cubic")
    return -cubic[2], cubic[1], -cubic[0]


def conic_matrix(pair: LegendrePair, mu) -> list[list]:
    """Symmetric matrix of R(x, y, w) - mu x y in the basis (x, y, w)."""
    a, b = pair.alpha, pair.beta
    mu = _norm(mu)
    half = Fraction(1, 2)
    return [
        [-1 / a, -mu * half, (a + 1) / a * half],
        [-mu * half, -1 / b, (b + 1) / b * half],
        [(a + 1) / a * half, (b + 1) / b * half, a * 0 - 1],
    ]


def conic_poly(pair: LegendrePair, mu) -> MPoly:
    """R(x, y, w) - mu x y."""
    x, y, w = MPoly.gens(3)
    a, b = pair.alpha, pair.beta
    r = (-1 / a) * x**2 + (-1 / b) * y**2 + ((a + 1) / a) * x * w + ((b + 1) / b) * y * w - w**2
    return r - _norm(mu) * x * y


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def conic_is_singular(pair: LegendrePair, mu) -> bool:
    return _det3(conic_matrix(pair, mu)) == 0


def upsilon2_branch_points(pair: LegendrePair, mu) -> list[tuple]:
    """The four branch points of the fiber over [mu, 1], as (x, y, w)."""
    if conic_is_singular(pair, mu):
        raise SingularConic(f"the conic R = mu x y is singular at mu = {mu}")
    a, b = pair.alpha, pair.beta
    mu = _norm(mu)
    one = a * 0 + 1
    return [
        (one, (1 - mu) * b + 1, one),
        (a, (1 - mu * a) * b + 1, one),
        ((1 - mu) * a + 1, one, one),
        ((1 - mu * b) * a + 1, b, one),
    ]


def _same_point(p, q) -> bool:
    """Projective equality by cross-multiplication."""
    return all(p[i] * q[j] == p[j] * q[i] for i in range(3) for j in range(i + 1, 3))


def branch_points_coincide(pair: LegendrePair, mu) -> bool:
    pts = upsilon2_branch_points(pair, mu)
    return any(_same_point(pts[i], pts[j]) for i in range(4) for j in range(i + 1, 4))


def fiber_is_degenerate(pair: LegendrePair, mu) -> bool:
    """True when the conic is singular or two branch points coincide."""
    if conic_is_singular(pair, mu):
        return True
    return branch_points_coincide(pair, mu)


def upsilon2_cross_ratio(pair: LegendrePair, mu):
    """(mu - 1)(mu ab - 1)(mu ab - a - b) / ((a - 1)(b - 1))."""
    a, b = pair.alpha, pair.beta
    mu = _norm(mu)
    return (mu - 1) * (mu * a * b - 1) * (mu * a * b - a - b) / ((a - 1) * (b - 1))


def cross_ratio_from_branch_points(pair: LegendrePair, mu):
    """Cross-ratio of the four branch points on the conic, computed without
    the closed form: project from the first branch point (which maps to its
    tangent direction) and take the cross-ratio in P^1."""
    pts = upsilon2_branch_points(pair, mu)
    m = conic_matrix(pair, mu)
    p0 = pts[0]
    # pencil of lines through p0: l1 = x - x0 w, l2 = y - y0 w
    coords = []
    grad = [sum(m[i][j] * p0[j] for j in range(3)) for i in range(3)]
    # tangent T = g0 x + g1 y + g2 w = g0 l1 + g1 l2 (T(p0) = 0 fixes the w part)
    coords.append((-grad[1], grad[0]))
    for p in pts[1:]:
        coords.append((p[0] - p0[0] * p[2], p[1] - p0[1] * p[2]))

    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]

    c0, c1, c2, c3 = coords
    return det(c0, c2) * det(c1, c3) / (det(c0, c3) * det(c1, c2))


def j_of_cross_ratio(r):
    """4 (r^2 - r + 1)^3 / (27 r^2 (r - 1)^2)."""
    return 4 * (r * r - r + 1) ** 3 / (27 * r * r * (r - 1) ** 2)


def _require_rational(pair: LegendrePair):
    if not pair.rational:
        raise PreconditionError("rational function output needs rational alpha, beta")


def upsilon2_functional_invariant(pair: LegendrePair) -> RationalFunction:
    """4 (a^4 b^4 D + k^2)^3 / (27 a^8 b^8 k^2 D^2), k = (a - 1)(b - 1)."""
    _require_rational(pair)
    a, b = pair.alpha, pair.beta
    d = upsilon2_data(pair).d_poly
    k2 = ((a - 1) * (b - 1)) ** 2
    num = (d * (a**4 * b**4) + k2) ** 3 * 4
    den = d * d * (27 * a**8 * b**8 * k2)
    return RationalFunction(num, den)


def upsilon2_functional_invariant_printed(pair: LegendrePair) -> RationalFunction:
    """The same expression with k^4 in the denominator instead of k^2."""
    _require_rational(pair)
    a, b = pair.alpha, pair.beta
    d = upsilon2_data(pair).d_poly
    k2 = ((a - 1) * (b - 1)) ** 2
    num = (d * (a**4 * b**4) + k2) ** 3 * 4
    den = d * d * (27 * a**8 * b**8 * k2 * k2)
    return RationalFunction(num, den)


def cross_ratio_polynomial(pair: LegendrePair) -> Polynomial:
    _require_rational(pair)
    a, b = pair.alpha, pair.beta
    return (
        Polynomial([-1, 1]) * Polynomial([-1, a * b]) * Polynomial([-a - b, a * b]) * (1 / ((a - 1) * (b - 1)))
    )


def upsilon2_j_via_cross_ratio(pair: LegendrePair) -> RationalFunction:
    """4 (r^2 - r + 1)^3 / (27 r^2 (r - 1)^2) composed with r(mu)."""
    r = cross_ratio_polynomial(pair)
    return RationalFunction((r * r - r + 1) ** 3 * 4, (r * r * (r - 1) ** 2) * 27)


# -- fiber cases ----------------------------------------------------------------------

_EXPECTED_MULTS = {
    "a": [1, 1, 1, 1, 1, 1],
    "b": [2, 1, 1, 1, 1],
    "c": [2, 2, 1, 1],
    "d": [3, 1, 1, 1],
}


@dataclass(frozen=True)
class UpsilonCase:
    tag: str
    j1: object
    j2: object
    fibers: dict
    root_multiplicities: tuple
    consistent: bool


def fiber_type_for_multiplicity(m: int) -> KodairaType:
    """A root of D of multiplicity m is a pole of J of order 2m where the
    numerator does not vanish, i.e. a fiber of type I_{2m}."""
    return KodairaType("I", 2 * m)


def upsilon2_fiber_cases(pair: LegendrePair) -> UpsilonCase:
    """Case (a)-(d) from exact J comparison, cross-checked against the root
    multiplicities of D."""
    j1, j2 = legendre_j(pair.alpha), legendre_j(pair.beta)
    if j1 != j2:
        tag = "a"
    elif j1 == 1:
        tag = "c"
    elif j1 == 0:
        tag = "d"
    else:
        tag = "b"
    ctx = upsilon2_data(pair)
    mults = sorted((m for _, m in ctx.sigma_upsilon), reverse=True)
    if pair.rational:
        mults_sf = squarefree_decompose(ctx.d_poly).multiplicities()
        consistent = mults == mults_sf == _EXPECTED_MULTS[tag]
    else:
        consistent = mults == _EXPECTED_MULTS[tag]
    fibers: dict[str, int] = {}
    for m in mults:
        label = fiber_type_for_multiplicity(m).label
        fibers[label] = fibers.get(label, 0) + 1
    return UpsilonCase(tag, j1, j2, fibers, tuple(mults), consistent)


def upsilon2_euler_sum(case: UpsilonCase) -> int:
    return 12 + sum(KodairaType.parse(k).euler_number * v for k, v in case.fibers.items())


def sixth_root_of_unity() -> QuadExtElement:
    """(1 + sqrt(-3)) / 2, a root of l^2 - l + 1 (the J = 0 Legendre
    parameter)."""
    return QuadExtElement(Fraction(1, 2), Fraction(1, 2), -3)
