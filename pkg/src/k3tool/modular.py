"""The modular function J (normalized so J(i) = 1) and period-vector
bookkeeping for lattice-polarized K3 surfaces.

J = E4^3 / (E4^3 - E6^2) with E4 = 1 + 240 sum sigma_3(n) q^n and
E6 = 1 - 504 sum sigma_5(n) q^n. The argument is first moved into the
standard fundamental domain, so |q| <= exp(-pi sqrt 3) < 0.0044 and the
truncated series has an explicit tail bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import PrecisionExhausted, PreconditionError
from .exact import MPoly
from .exact.bigcomplex import DEFAULT_PREC, MAX_PREC, BigComplex

GUARD_BITS = 32
MAX_TERMS = 4096
MAX_REDUCTION_STEPS = 10_000


def _divisor_sum(n: int, k: int) -> int:
    s = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            s += d**k
            e = n // d
            if e != d:
                s += e**k
        d += 1
    return s


def reduce_to_fundamental_domain(tau):
    """(tau', steps) with tau' in |Re| <= 1/2, |tau'| >= 1, in the SL2(Z)
    orbit of tau (mpmath mpc in, mpc out, at the current precision)."""
    for step in range(MAX_REDUCTION_STEPS):
        n = mpmath.nint(tau.real)
        if n:
            tau = tau - n
        if abs(tau) < 1 - mpmath.mpf(2) ** (-mpmath.mp.prec + 8):
            tau = -1 / tau
        else:
            return tau, step
    raise PrecisionExhausted("fundamental-domain reduction did not terminate")


def _terms_needed(r: float, bits: int) -> int:
    """Smallest N with sum_{n > N} 504 n^6 r^n < 2^-bits (sigma_5(n) <= n^6)."""
    log_target = -bits * math.log(2)
    for n in range(1, MAX_TERMS):
        m = n + 1
        ratio = ((m + 1) / m) ** 6 * r
        if ratio >= 1:
            continue
        tail = math.log(504) + 6 * math.log(m) + m * math.log(r) - math.log(1 - ratio)
        if tail < log_target:
            return n
    raise PrecisionExhausted(f"more than {MAX_TERMS} series terms needed")


def eisenstein_e4_e6(q, n_terms: int):
    e4 = mpmath.mpf(1)
    e6 = mpmath.mpf(1)
    qn = mpmath.mpf(1)
    for n in range(1, n_terms + 1):
        qn = qn * q
        e4 += 240 * _divisor_sum(n, 3) * qn
        e6 -= 504 * _divisor_sum(n, 5) * qn
    return e4, e6


def modular_J(tau, precision_bits: int = DEFAULT_PREC) -> BigComplex:
    """J(tau) with absolute error below 2^-precision_bits (relative for
    large |J|)."""
    if precision_bits > MAX_PREC:
        raise PrecisionExhausted(f"precision above {MAX_PREC} bits")
    t0 = BigComplex.make(tau, precision_bits + GUARD_BITS)
    if not t0.im > 0:
        raise PreconditionError("tau must lie in the upper half plane")
    work = precision_bits + GUARD_BITS
    with mpmath.workprec(work):
        t, _ = reduce_to_fundamental_domain(mpmath.mpc(t0.re, t0.im))
        # E4^3 - E6^2 = 1728 q + ..., so about log2(1/|q|) bits cancel
        lost = int(2 * math.pi * float(t.imag) / math.log(2)) + 1
    work = precision_bits + GUARD_BITS + lost
    if work > 8 * MAX_PREC:
        raise PrecisionExhausted("cancellation in E4^3 - E6^2 needs too many bits")
    with mpmath.workprec(work):
        t = mpmath.mpc(t0.re, t0.im)
        t, _ = reduce_to_fundamental_domain(t)
        q = mpmath.exp(2j * mpmath.pi * t)
        r = float(abs(q))
        n_terms = _terms_needed(r, work)
        e4, e6 = eisenstein_e4_e6(q, n_terms)
        e43 = e4**3
        j = e43 / (e43 - e6**2)
        return BigComplex.make(j, precision_bits)


def psl2_action(a: int, b: int, c: int, d: int, tau) -> BigComplex:
    if a * d - b * c != 1:
        raise PreconditionError("matrix must have determinant 1")
    t = BigComplex.make(tau) if not isinstance(tau, BigComplex) else tau
    return (t * a + b) / (t * c + d)


@dataclass(frozen=True)
class PeriodPoint:
    tau: BigComplex
    u: BigComplex

    def __post_init__(self):
        for name in ("tau", "u"):
            v = getattr(self, name)
            if not isinstance(v, BigComplex):
                object.__setattr__(self, name, v := BigComplex.make(v))
            if not v.im > 0:
                raise PreconditionError(f"{name} must lie in the upper half plane")

    def swapped(self) -> "PeriodPoint":
        return PeriodPoint(self.u, self.tau)


# pairing on the basis x1, x2, y1, y2: (x_i, y_i) = 1, all else 0
PERIOD_GRAM = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))


@dataclass(frozen=True)
class PeriodVector:
    coords: tuple
    gram: tuple = PERIOD_GRAM

    @classmethod
    def from_point(cls, pt: PeriodPoint) -> "PeriodVector":
        return cls((pt.tau, BigComplex.make(1, pt.tau.precision_bits), pt.u, -(pt.tau * pt.u)))

    def pair(self, a, b):
        total = 0
        for i in range(4):
            for j in range(4):
                if self.gram[i][j]:
                    total = a[i] * b[j] * self.gram[i][j] + total
        return total


def symbolic_period_vector() -> tuple:
    """(tau, 1, u, -tau u) as polynomials in tau, u."""
    tau, u = MPoly.gens(2)
    return (tau, MPoly.const(2, 1), u, -(tau * u))


def sigma_pi_from_periods(pt: PeriodPoint, precision_bits: int = DEFAULT_PREC) -> tuple[BigComplex, BigComplex]:
    """(J(tau) + J(u), J(tau) J(u))."""
    jt = modular_J(pt.tau, precision_bits)
    ju = modular_J(pt.u, precision_bits)
    return jt + ju, jt * ju


@dataclass(frozen=True)
class PeriodCertificate:
    omega_omega_symbolic_zero: bool
    omega_omega: BigComplex
    omega_omegabar: BigComplex
    expected: object  # 4 Im(tau) Im(u) as an mpf

    @property
    def ok(self) -> bool:
        tol = mpmath.mpf(2) ** (-self.omega_omegabar.precision_bits + 8) * (1 + abs(self.expected))
        return (
            self.omega_omega_symbolic_zero
            and abs(self.omega_omega) <= tol
            and abs(self.omega_omegabar - BigComplex.make(self.expected, self.omega_omegabar.precision_bits)) <= tol
            and self.expected > 0
        )


def period_vector_checks(pt: PeriodPoint) -> PeriodCertificate:
    sym = symbolic_period_vector()
    pv = PeriodVector(sym)
    sym_zero = pv.pair(sym, sym).is_zero()
    w = PeriodVector.from_point(pt)
    wbar = tuple(c.conjugate() for c in w.coords)
    prec = pt.tau.precision_bits
    with mpmath.workprec(prec):
        expected = 4 * pt.tau.im * pt.u.im
    return PeriodCertificate(sym_zero, w.pair(w.coords, w.coords), w.pair(w.coords, wbar), expected)
