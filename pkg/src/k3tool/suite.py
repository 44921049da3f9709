"""The acceptance battery: eight checks over random and hand-picked inputs.

Each check returns a CriterionResult; ``run_suite`` runs them all and is
what ``k3tool verify-suite`` prints.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exact import BigComplex, Polynomial, rational_function_equal, rational_roots, squarefree_decompose
from .inose import (
    InoseContext,
    InoseParams,
    from_j_pair,
    j_pair,
    modular_invariants,
    predicted_finite_fibers,
    predicted_infinity_fiber,
    psi2_fiber_case,
    psi2_weierstrass,
    theta2_fiber_case,
    theta2_weierstrass,
)
from .kummer import (
    LegendrePair,
    cross_ratio_polynomial,
    legendre_j,
    sixth_root_of_unity,
    upsilon2_data,
    upsilon2_euler_sum,
    upsilon2_fiber_cases,
    upsilon2_functional_invariant,
    upsilon2_j_via_cross_ratio,
)
from .lattice import (
    curve_config,
    discriminant_form,
    divisor_square,
    gram_of_classes,
    inose_spans,
    is_isometric,
    named_lattice,
    roots,
)
from .lattice.forms import det, signature
from .matching import build_match, is_degenerate, verify_case_identity, verify_functional_match
from .modular import PeriodPoint, modular_J, sigma_pi_from_periods
from .report import reconciliation_report, report_ok
from .weierstrass import classify_infinity_fiber, discriminant, euler_sum, fiber_multiset, full_fiber_table

DEFAULT_SEED = 20240611
FUNCTIONAL_SAMPLES = 40


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"criterion {self.number} [{self.name}]: {'PASS' if self.passed else 'FAIL'} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


def random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_legendre_pair(rng: random.Random, bound: int = 12) -> LegendrePair:
    """A pair avoiding 0, 1 and the degenerate coincidences of D."""
    while True:
        a, b = random_rational(rng, bound, True), random_rational(rng, bound, True)
        if 1 in (a, b):
            continue
        pair = LegendrePair(a, b)
        if not is_degenerate(pair):
            return pair


# -- 1 --------------------------------------------------------------------------------


def criterion_headline(rng: random.Random, count: int = 500) -> CriterionResult:
    bad = []
    for _ in range(count):
        a, b = random_rational(rng, 10**6), random_rational(rng, 10**6)
        ctx = InoseContext.make(a, b)
        inv = modular_invariants(ctx)
        jp = j_pair(ctx)
        ok = inv.pi == a**3 and inv.sigma == a**3 - b**2 + 1
        ok = ok and (jp.j1 + jp.j2) == inv.sigma and (jp.j1 * jp.j2) == inv.pi
        if not ok:
            bad.append((str(a), str(b)))
    return CriterionResult(1, "modular invariants", not bad, {"samples": count, "failures": bad[:5]})


# -- 2 --------------------------------------------------------------------------------


def criterion_discriminants(rng: random.Random, count: int = 100) -> CriterionResult:
    bad = []
    for _ in range(count):
        a, b = random_rational(rng, 10**3), random_rational(rng, 10**3)
        ctx = InoseContext.make(a, b)
        p2 = ctx.p_poly * ctx.p_poly
        ok = discriminant(theta2_weierstrass(ctx)) == (Polynomial([1]) - p2) * 4
        ok = ok and discriminant(psi2_weierstrass(ctx)) == (p2 - 1) ** 2 * (-4)
        if not ok:
            bad.append((str(a), str(b)))
    return CriterionResult(2, "discriminant identities", not bad, {"samples": count, "failures": bad[:5]})


# -- 3 --------------------------------------------------------------------------------

FIBER_CASE_INSTANCES = ((0, 0), (4, 7), (4, -9), (4, 9), (4, -7), (0, 1), (0, -1), (1, 0), (2, 5))


def fiber_case_rows():
    rows = []
    for a, b in FIBER_CASE_INSTANCES:
        ctx = InoseContext.make(Fraction(a), Fraction(b))
        for name, fib, tag in (
            ("theta2", theta2_weierstrass(ctx), theta2_fiber_case(ctx)),
            ("psi2", psi2_weierstrass(ctx), psi2_fiber_case(ctx)),
        ):
            table = full_fiber_table(fib)
            rows.append(
                {
                    "a": str(a),
                    "b": str(b),
                    "fibration": name,
                    "case": tag,
                    "finite": fiber_multiset(table, finite_only=True),
                    "expected_finite": predicted_finite_fibers(tag, name),
                    "infinity": classify_infinity_fiber(fib).label,
                    "expected_infinity": predicted_infinity_fiber(name).label,
                    "euler": euler_sum(table),
                }
            )
    return rows


def criterion_fiber_cases() -> CriterionResult:
    rows = fiber_case_rows()
    ok = all(
        r["finite"] == r["expected_finite"] and r["infinity"] == r["expected_infinity"] and r["euler"] == 24 for r in rows
    )
    covered = sorted({r["case"] for r in rows})
    ok = ok and len(covered) == 5
    return CriterionResult(3, "fiber case coverage", ok, {"cases_covered": covered, "rows": len(rows)})


# -- 4 --------------------------------------------------------------------------------


def check_match(pair: LegendrePair, samples: int = FUNCTIONAL_SAMPLES) -> dict:
    al, be = pair.alpha, pair.beta
    j1, j2 = legendre_j(al), legendre_j(be)
    m = build_match(pair, "A")
    out = {
        "p": m.p == (al + 1) * (be + 1) / (3 * al * be),
        "q_cubed": m.q_cubed == -2 * (al - 1) * (be - 1) / (al**2 * be**2),
        "b_squared": m.b * m.b == (j1 - 1) * (j2 - 1),
        "a_cubed": m.a_cubed == j1 * j2,
        "case_identity": bool(verify_case_identity(m, pair)),
        "functional": verify_functional_match(m, pair, samples),
        "rational_branch": m.rational,
    }
    return out


def criterion_matching(rng: random.Random, count: int = 50) -> CriterionResult:
    bad = []
    rational = 0
    for _ in range(count):
        pair = random_legendre_pair(rng)
        res = check_match(pair)
        rational += res.pop("rational_branch")
        if not all(res.values()):
            bad.append({"alpha": str(pair.alpha), "beta": str(pair.beta), **{k: v for k, v in res.items() if not v}})
    return CriterionResult(
        4, "coefficient matching", not bad, {"samples": count, "rational_branch": rational, "failures": bad[:5]}
    )


# -- 5 --------------------------------------------------------------------------------

UPSILON_CASE_INSTANCES = {"a": (2, 3), "b": (3, Fraction(1, 3)), "c": (2, Fraction(1, 2))}


def sigma_matches_roots(pair: LegendrePair) -> bool:
    """The listed singular locations against the zeros of r (r - 1), where
    r is the cross-ratio polynomial; both as multisets."""
    ctx = upsilon2_data(pair)
    r = cross_ratio_polynomial(pair)
    poly = r * (r - 1)
    listed = sorted((v, m) for v, m in ctx.sigma_upsilon)
    found = []
    for f, m in squarefree_decompose(poly).factors:
        for root in rational_roots(f):
            found.append((root, m))
    return sorted(found) == listed and sum(m for _, m in listed) == 6


def criterion_upsilon(rng: random.Random, count: int = 50) -> CriterionResult:
    bad = []
    for _ in range(count):
        pair = random_legendre_pair(rng)
        ok = rational_function_equal(upsilon2_functional_invariant(pair), upsilon2_j_via_cross_ratio(pair))
        ok = ok and sigma_matches_roots(pair)
        if not ok:
            bad.append((str(pair.alpha), str(pair.beta)))
    cases = {}
    for tag, (a, b) in UPSILON_CASE_INSTANCES.items():
        pair = LegendrePair(Fraction(a), Fraction(b))
        c = upsilon2_fiber_cases(pair)
        cases[tag] = c.tag == tag and c.consistent and upsilon2_euler_sum(c) == 24 and sigma_matches_roots(pair)
    w = sixth_root_of_unity()
    c = upsilon2_fiber_cases(LegendrePair(w, w))
    cases["d"] = c.tag == "d" and c.consistent and upsilon2_euler_sum(c) == 24
    ok = not bad and all(cases.values())
    return CriterionResult(5, "Upsilon2 functional invariant", ok, {"samples": count, "failures": bad[:5], "cases": cases})


# -- 6 --------------------------------------------------------------------------------


def lattice_claims() -> dict:
    ref = discriminant_form(named_lattice("H2") + named_lattice("H2") + named_lattice("H2"))
    out = {}
    for name in ("Kummer", "Nikulin"):
        f = discriminant_form(named_lattice(name))
        out[f"{name}_disc_matches_H2^3"] = f.invariant_factors == (2,) * 6 and is_isometric(f, ref)
    out["det_E8"] = named_lattice("E8").det() == 1
    out["det_D16plus"] = named_lattice("D16plus").det() == 1

    cfg = curve_config("inose_quartic_diag")
    spans = inose_spans(cfg)
    classes = spans["E8_first"] + spans["E8_second"] + spans["H"]
    g = gram_of_classes(classes)
    blocks = [(0, 8), (8, 16), (16, 18)]
    orth = all(
        g[i][j] == 0
        for bi, (s0, e0) in enumerate(blocks)
        for bj, (s1, e1) in enumerate(blocks)
        if bi != bj
        for i in range(s0, e0)
        for j in range(s1, e1)
    )
    types = []
    for s, e in blocks[:2]:
        sub = [row[s:e] for row in g[s:e]]
        types.append(det(sub) == 1 and signature(sub) == (0, 8, 0) and all(sub[i][i] == -2 for i in range(8)))
    hsub = [row[16:18] for row in g[16:18]]
    # even unimodular of signature (1, 1) is H
    types.append(det(hsub) == -1 and hsub[0][0] % 2 == 0 and hsub[1][1] % 2 == 0)
    out["inose_spans_orthogonal"] = orth
    out["inose_span_types_E8_E8_H"] = all(types)

    dk = curve_config("double_kummer_pencil")
    out["special_divisor_square_zero"] = divisor_square(dk, dk.fibers["special"]) == 0
    c11 = curve_config("inose_diag11")
    out["I*12_divisor_square_zero"] = divisor_square(c11, c11.fibers["I*12"]) == 0
    q = curve_config("quotient_diag22_33")
    out["fibertrans_square_zero"] = divisor_square(q, q.fibers["II*"]) == 0
    out["E8_roots_240"] = len(roots(named_lattice("E8"))) == 240
    return out


def criterion_lattices() -> CriterionResult:
    out = lattice_claims()
    return CriterionResult(6, "lattice claims", all(out.values()), out)


# -- 7 --------------------------------------------------------------------------------


def criterion_modular(precision_bits: int = 128) -> CriterionResult:
    tol = mpmath.mpf(2) ** -100
    with mpmath.workprec(precision_bits + 32):
        rho = mpmath.expjpi(mpmath.mpf(2) / 3)
    j_i = modular_J(BigComplex.make(1j, precision_bits), precision_bits)
    j_rho = modular_J(BigComplex.make(rho, precision_bits + 32), precision_bits)
    out = {
        "J(i)=1": bool(abs(j_i - 1) < tol),
        "J(rho)=0": bool(abs(j_rho) < tol),
    }
    pt = PeriodPoint(BigComplex.make(1j, precision_bits), BigComplex.make(1j, precision_bits))
    sigma, pi = sigma_pi_from_periods(pt, precision_bits)
    out["sigma=2"] = bool(abs(sigma - 2) < tol)
    out["pi=1"] = bool(abs(pi - 1) < tol)
    # exact point: round the numeric invariants and close the loop
    j1, j2 = (Fraction(round(float(v.re))) for v in _roots_of(sigma, pi))
    sols = from_j_pair(j1, j2)
    out["from_j_pair_contains_(1,0)"] = InoseParams(Fraction(1), Fraction(0)) in sols
    return CriterionResult(7, "modular layer", all(out.values()), out)


def _roots_of(sigma, pi):
    with mpmath.workprec(sigma.precision_bits):
        s, p = sigma.value, pi.value
        d = mpmath.sqrt(s * s - 4 * p)
        return BigComplex.make((s + d) / 2, sigma.precision_bits), BigComplex.make((s - d) / 2, sigma.precision_bits)


# -- 8 --------------------------------------------------------------------------------


def criterion_report() -> CriterionResult:
    entries = reconciliation_report()
    return CriterionResult(
        8, "reconciliation report", report_ok(entries), {"entries": [e.to_json() for e in entries]}
    )


def run_criterion(number: int, seed: int = DEFAULT_SEED) -> CriterionResult:
    rng = random.Random(seed * 10 + number)
    fn = {
        1: lambda: criterion_headline(rng),
        2: lambda: criterion_discriminants(rng),
        3: criterion_fiber_cases,
        4: lambda: criterion_matching(rng),
        5: lambda: criterion_upsilon(rng),
        6: criterion_lattices,
        7: criterion_modular,
        8: criterion_report,
    }[number]
    t = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t
    return res


def run_suite(seed: int = DEFAULT_SEED) -> list[CriterionResult]:
    return [run_criterion(n, seed) for n in range(1, 9)]
