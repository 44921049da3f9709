from fractions import Fraction

from hypothesis import strategies as st


def rationals(bound: int = 50, nonzero: bool = False):
    num = st.integers(-bound, bound)
    if nonzero:
        num = num.filter(bool)
    return st.builds(Fraction, num, st.integers(1, bound))
