from fractions import Fraction

import pytest
from hypothesis import assume, given

from strategies import rationals
from k3tool.errors import DegenerateMatch, PreconditionError
from k3tool.exact.cubicext import CubicExtElement
from k3tool.kummer import LegendrePair, legendre_j
from k3tool.matching import (
    a_closed_form,
    b_closed_form,
    build_match,
    closed_form_report,
    invariants_consistency,
    is_degenerate,
    q_cubed_closed_form,
    q_relation_corrected,
    q_relation_printed,
    verify_case_identity,
    verify_functional_match,
)


def test_frozen_rational_branch():
    pair = LegendrePair(-8, -3)
    m = build_match(pair)
    assert (m.p, m.q_cubed, m.q) == (Fraction(7, 36), Fraction(-1, 8), Fraction(-1, 2))
    assert (m.a, m.b) == (Fraction(949, 324), Fraction(-20825, 5832))
    assert m.rational and not m.degenerate
    assert verify_case_identity(m, pair)
    assert verify_functional_match(m, pair)


def test_frozen_cubic_branch():
    pair = LegendrePair(2, 3)
    m = build_match(pair)
    assert m.p == Fraction(2, 3) and m.q_cubed == Fraction(-1, 9) and m.b == 0
    assert m.q == CubicExtElement.generator(Fraction(-1, 9))
    assert m.a == CubicExtElement(0, Fraction(-7, 3), 0, Fraction(-1, 9))
    assert verify_case_identity(m, pair)
    assert verify_functional_match(m, pair)
    with pytest.raises(PreconditionError):
        m.inose_context()
    with pytest.raises(PreconditionError):
        verify_functional_match(m, pair, samples=25)


@given(rationals(12, nonzero=True), rationals(12, nonzero=True))
def test_matching_properties(al, be):
    assume(1 not in (al, be))
    pair = LegendrePair(al, be)
    assume(not is_degenerate(pair))
    m = build_match(pair)
    assert m.p == (al + 1) * (be + 1) / (3 * al * be)
    assert m.q_cubed == q_cubed_closed_form(pair)
    assert verify_case_identity(m, pair)
    j1, j2 = legendre_j(al), legendre_j(be)
    assert m.a_cubed == j1 * j2
    assert m.b * m.b == (j1 - 1) * (j2 - 1)
    assert m.b in (b_closed_form(pair), -b_closed_form(pair))
    assert m.a == a_closed_form(m, pair)
    assert m.q == q_relation_corrected(m, pair)
    assert invariants_consistency(pair).ok


def test_case_b_flips_sign_of_q_cubed():
    pair = LegendrePair(5, Fraction(-7, 2))
    mb = build_match(pair, "B")
    assert mb.q_cubed == -q_cubed_closed_form(pair)
    assert verify_case_identity(mb, pair)
    rep = closed_form_report(pair)
    assert rep["q_cubed_caseB_is_negated"] and not rep["q_cubed_caseB_agrees"]


def test_printed_q_relation_misses_factor_a():
    pair = LegendrePair(5, Fraction(-7, 2))
    m = build_match(pair)
    assert q_relation_printed(pair) ** 3 != m.q_cubed


def test_degenerate_pairs():
    pair = LegendrePair(2, Fraction(1, 2))
    assert is_degenerate(pair)
    with pytest.raises(DegenerateMatch):
        build_match(pair, strict=True)
    m = build_match(pair)
    assert m.degenerate and m.certificate["consistent"]
    assert (m.a, m.b) == (1, 0)


def test_bad_case_label():
    with pytest.raises(PreconditionError):
        build_match(LegendrePair(2, 3), "C")
