import pytest

from k3tool.errors import NonMinimalModel, NotAnEllipticFibration
from k3tool.exact import Polynomial
from k3tool.weierstrass import (
    KodairaType,
    WeierstrassFibration,
    discriminant,
    euler_sum,
    fiber_multiset,
    full_fiber_table,
    kodaira_from_valuations,
)

X = Polynomial.x()

TATE_ROWS = [
    ((0, 0, 1), "I1"),
    ((0, 0, 7), "I7"),
    ((1, 1, 2), "II"),
    ((1, 2, 3), "III"),
    ((2, 2, 4), "IV"),
    ((2, 3, 6), "I*0"),
    ((2, 3, 9), "I*3"),
    ((3, 4, 8), "IV*"),
    ((3, 5, 9), "III*"),
    ((4, 5, 10), "II*"),
]


@pytest.mark.parametrize("triple,label", TATE_ROWS)
def test_tate_table(triple, label):
    assert kodaira_from_valuations(*triple).label == label


def test_tate_smooth_and_errors():
    assert kodaira_from_valuations(0, 0, 0) is None
    with pytest.raises(NonMinimalModel):
        kodaira_from_valuations(4, 6, 12)
    with pytest.raises(NotAnEllipticFibration):
        kodaira_from_valuations(0, 0, float("inf"))


@pytest.mark.parametrize("label,euler", [("I5", 5), ("I*2", 8), ("II", 2), ("IV*", 8), ("II*", 10)])
def test_euler_numbers(label, euler):
    k = KodairaType.parse(label)
    assert k.euler_number == euler and k.label == label


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        KodairaType.parse("V")


def test_discriminant_convention():
    fib = WeierstrassFibration(Polynomial([1, 1]), Polynomial([0, 0, 1]))
    assert discriminant(fib) == 4 * (X + 1) ** 3 + 27 * X**4


def test_twelve_cusps():
    fib = WeierstrassFibration(Polynomial([0]), X**12 - 1)
    table = full_fiber_table(fib)
    assert fiber_multiset(table) == {"II": 12}
    assert euler_sum(table) == 24


def test_star_fiber_at_infinity():
    # g2, g3 of degrees 6, 9 give orders 2, 3 at infinity and I*n there
    fib = WeierstrassFibration(X**6 + 1, X**9 + X)
    table = full_fiber_table(fib)
    assert euler_sum(table) == 24
    assert any(r.location.is_infinity and r.kodaira.kind == "I*" for r in table)
