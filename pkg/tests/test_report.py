from k3tool.inose import InoseContext
from k3tool.report import (
    SUSPECTED,
    reconciliation_report,
    reference_fiber_cubic,
    report_ok,
)
from k3tool.inose import fiber_cubic

EXPECTED_TAGS = {
    "discriminant_theta2": "agree",
    "discriminant_psi2": "agree",
    "j_theta2": "disagree",
    "j_psi2": "disagree",
    "fiber_cubic": "disagree",
    "q_relation": "disagree",
    "j_upsilon2": "disagree",
    "shift_p": "agree",
    "q_cubed": "agree",
    "b": "agree",
    "a": "agree",
}


def test_report_tags_frozen():
    entries = reconciliation_report()
    assert {e.key: e.tag for e in entries} == EXPECTED_TAGS
    assert report_ok(entries)


def test_disagreements_only_on_suspected_and_validated():
    for e in reconciliation_report():
        assert e.derived_validated
        if not e.agree:
            assert e.key in SUSPECTED and e.suspected_misprint


def test_reference_cubic_differs_only_off_zero_a():
    ctx0 = InoseContext.make(0, 5)
    assert reference_fiber_cubic(ctx0, 2) == fiber_cubic(ctx0, 2)
    ctx = InoseContext.make(1, 5)
    assert reference_fiber_cubic(ctx, 2) != fiber_cubic(ctx, 2)


def test_json_shape():
    row = reconciliation_report()[0].to_json()
    assert set(row) == {"key", "derived", "reference", "tag", "derived_validated", "suspected_misprint", "ok"}
