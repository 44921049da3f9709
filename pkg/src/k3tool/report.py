"""Reconciliation of derived closed forms against reference displays.

Each entry recomputes a formula from first principles (Weierstrass data,
direct substitution, coefficient matching) and compares it with a
reference display that is transcribed verbatim as a function. An entry
passes when the two agree, or when the reference is a known misprint and
the derived form validates independently.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import MPoly, Polynomial, RationalFunction, rational_function_equal
from .inose import (
    InoseContext,
    fiber_cubic,
    fiber_cubic_by_substitution,
    psi2_j,
    psi2_j_closed_form,
    psi2_weierstrass,
    theta2_j,
    theta2_j_closed_form,
    theta2_weierstrass,
    weierstrass_transform_check,
)
from .kummer import LegendrePair, upsilon2_functional_invariant, upsilon2_functional_invariant_printed, upsilon2_j_via_cross_ratio
from .matching import (
    build_match,
    b_closed_form,
    q_cubed_closed_form,
    a_closed_form,
    q_relation_corrected,
    q_relation_printed,
    verify_case_identity,
    verify_functional_match,
)
from .weierstrass import discriminant

INOSE_SAMPLES = ((0, 0), (1, 0), (4, 7), (Fraction(2, 3), Fraction(-5, 7)), (-3, 2))
LAMBDA_SAMPLES = (2, Fraction(-1, 3), Fraction(5, 4))
PAIR_SAMPLES = ((2, 3), (5, Fraction(-7, 2)), (-2, Fraction(7, 3)), (Fraction(3, 5), 4))

# entries whose reference display is a known misprint
SUSPECTED = frozenset({"j_theta2", "j_psi2", "fiber_cubic", "q_relation", "j_upsilon2"})


@dataclass
class ReportEntry:
    key: str
    derived: str
    reference: str
    agree: bool
    derived_validated: bool
    suspected_misprint: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.agree:
            return self.derived_validated
        return self.suspected_misprint and self.derived_validated

    @property
    def tag(self) -> str:
        return "agree" if self.agree else "disagree"

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "derived": self.derived,
            "reference": self.reference,
            "tag": self.tag,
            "derived_validated": self.derived_validated,
            "suspected_misprint": self.suspected_misprint,
            "ok": self.ok,
        }


def _contexts():
    return [InoseContext.make(Fraction(a), Fraction(b)) for a, b in INOSE_SAMPLES]


def _pairs():
    return [LegendrePair(Fraction(a), Fraction(b)) for a, b in PAIR_SAMPLES]


# -- reference displays, transcribed ------------------------------------------------


def reference_theta2_discriminant(ctx: InoseContext) -> Polynomial:
    return (Polynomial([1]) - ctx.p_poly * ctx.p_poly) * 4


def reference_psi2_discriminant(ctx: InoseContext) -> Polynomial:
    return (ctx.p_poly * ctx.p_poly - 1) ** 2 * (-4)


def reference_j_theta2(ctx: InoseContext) -> RationalFunction:
    p2 = ctx.p_poly * ctx.p_poly
    return RationalFunction((Polynomial([3]) - p2 * 4) ** 2, (Polynomial([1]) - p2) * 9)


def reference_j_psi2(ctx: InoseContext) -> RationalFunction:
    p2 = ctx.p_poly * ctx.p_poly
    return RationalFunction((p2 + 3) ** 2, (p2 - 1) ** 2 * 9)


def reference_fiber_cubic(ctx: InoseContext, lam) -> MPoly:
    """2y^2z - (8 lam^3 - 6 a z w^2 - 2b) z w^2 - z^2 w - w^3, verbatim."""
    y, z, w = MPoly.gens(3)
    lam = Fraction(lam)
    inner = 8 * lam**3 - 6 * ctx.a * z * w**2 - 2 * ctx.b
    return 2 * y**2 * z - inner * z * w**2 - z**2 * w - w**3


# -- entries ------------------------------------------------------------------------


def _entry_discriminants() -> list[ReportEntry]:
    t_ok = all(discriminant(theta2_weierstrass(c)) == reference_theta2_discriminant(c) for c in _contexts())
    p_ok = all(discriminant(psi2_weierstrass(c)) == reference_psi2_discriminant(c) for c in _contexts())
    return [
        ReportEntry("discriminant_theta2", "4 g2^3 + 27 g3^2 = 4 (1 - P^2)", "4 (1 - P^2)", t_ok, t_ok),
        ReportEntry("discriminant_psi2", "4 g2^3 + 27 g3^2 = -4 (P^2 - 1)^2", "-4 (P^2 - 1)^2", p_ok, p_ok),
    ]


def _entry_j(key, derived_text, reference_text, computed, closed, reference) -> ReportEntry:
    validated = all(rational_function_equal(computed(c), closed(c)) for c in _contexts())
    agree = all(rational_function_equal(computed(c), reference(c)) for c in _contexts())
    return ReportEntry(key, derived_text, reference_text, agree, validated, key in SUSPECTED)


def _entry_fiber_cubic() -> ReportEntry:
    ctxs = _contexts()
    validated = all(
        fiber_cubic(c, lam) == fiber_cubic_by_substitution(c, lam) for c in ctxs for lam in LAMBDA_SAMPLES
    ) and all(weierstrass_transform_check(c, lam) for c in ctxs for lam in LAMBDA_SAMPLES)
    agree = all(fiber_cubic(c, lam) == reference_fiber_cubic(c, lam) for c in ctxs for lam in LAMBDA_SAMPLES)
    return ReportEntry(
        "fiber_cubic",
        "2y^2z - (8 lam^3 - 6 a lam - 2b) z w^2 - z^2 w - w^3",
        "2y^2z - (8 lam^3 - 6 a z w^2 - 2b) z w^2 - z^2 w - w^3",
        agree,
        validated,
        True,
    )


def _entry_q_relation() -> ReportEntry:
    validated = True
    agree = True
    for pair in _pairs():
        m = build_match(pair, "A")
        validated &= bool(verify_case_identity(m, pair)) and m.q == q_relation_corrected(m, pair)
        validated &= verify_functional_match(m, pair)
        printed = q_relation_printed(pair)
        agree &= m.q in (printed, -printed)
    return ReportEntry(
        "q_relation",
        "q = -9 a (alpha-1)(beta-1) / (2 (alpha^2-alpha+1)(beta^2-beta+1))",
        "q = +-(-9 (alpha-1)(beta-1)) / (2 (alpha^2-alpha+1)(beta^2-beta+1))",
        agree,
        validated,
        True,
    )


def _entry_j_upsilon2() -> ReportEntry:
    pairs = _pairs()
    validated = all(rational_function_equal(upsilon2_functional_invariant(p), upsilon2_j_via_cross_ratio(p)) for p in pairs)
    agree = all(
        rational_function_equal(upsilon2_functional_invariant_printed(p), upsilon2_j_via_cross_ratio(p)) for p in pairs
    )
    return ReportEntry(
        "j_upsilon2",
        "4 (a^4 b^4 D + k^2)^3 / (27 a^8 b^8 k^2 D^2), k = (alpha-1)(beta-1)",
        "4 (a^4 b^4 D + k^2)^3 / (27 a^8 b^8 k^4 D^2)",
        agree,
        validated,
        True,
    )


def _entry_matching_constants() -> list[ReportEntry]:
    p_ok = q3_ok = b_ok = a_ok = True
    for pair in _pairs():
        m = build_match(pair, "A")
        al, be = pair.alpha, pair.beta
        p_ok &= m.p == (al + 1) * (be + 1) / (3 * al * be)
        q3_ok &= m.q_cubed == q_cubed_closed_form(pair)
        b_ok &= m.b in (b_closed_form(pair), -b_closed_form(pair))
        a_ok &= m.a == a_closed_form(m, pair)
    return [
        ReportEntry("shift_p", "p = e1 / 3", "(alpha+1)(beta+1) / (3 alpha beta)", p_ok, p_ok),
        ReportEntry("q_cubed", "constant terms of the case identities", "-2 (alpha-1)(beta-1) / (alpha^2 beta^2)", q3_ok, q3_ok),
        ReportEntry("b", "constant terms of the case identities", "+-(a-2)(a+1)(2a-1)(b-2)(b+1)(2b-1) / (27 a (a-1) b (b-1))", b_ok, b_ok),
        ReportEntry("a", "linear terms of the case identities", "4 (a^2-a+1)(b^2-b+1) / (9 a^2 b^2 q^2)", a_ok, a_ok),
    ]


def reconciliation_report() -> list[ReportEntry]:
    entries = _entry_discriminants()
    entries.append(
        _entry_j(
            "j_theta2",
            "(3 - 4P^2)^3 / (27 (1 - P^2))",
            "(3 - 4P^2)^2 / (9 (1 - P^2))",
            theta2_j,
            theta2_j_closed_form,
            reference_j_theta2,
        )
    )
    entries.append(
        _entry_j(
            "j_psi2",
            "(P^2 + 3)^3 / (27 (P^2 - 1)^2)",
            "(P^2 + 3)^2 / (9 (P^2 - 1)^2)",
            psi2_j,
            psi2_j_closed_form,
            reference_j_psi2,
        )
    )
    entries.append(_entry_fiber_cubic())
    entries.append(_entry_q_relation())
    entries.append(_entry_j_upsilon2())
    entries.extend(_entry_matching_constants())
    return entries


def report_ok(entries) -> bool:
    return all(e.ok for e in entries)
