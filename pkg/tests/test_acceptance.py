"""Acceptance battery: one pass/fail line per criterion."""
import pytest

from k3tool.suite import DEFAULT_SEED, run_criterion

CRITERIA = {
    1: 10.0,
    2: 10.0,
    3: 10.0,
    4: 10.0,
    5: 10.0,
    6: 60.0,
    7: 10.0,
    8: 10.0,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = run_criterion(number, seed=DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    assert result.seconds <= CRITERIA[number], f"took {result.seconds:.2f}s"
