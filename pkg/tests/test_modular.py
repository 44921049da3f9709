import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from k3tool.errors import PrecisionExhausted, PreconditionError
from k3tool.exact import BigComplex
from k3tool.modular import (
    PeriodPoint,
    modular_J,
    period_vector_checks,
    psl2_action,
    reduce_to_fundamental_domain,
    sigma_pi_from_periods,
)

TOL = mpmath.mpf(2) ** -100


def _tau(re, im, prec=160):
    with mpmath.workprec(prec):
        return BigComplex.make(mpmath.mpc(re, im), prec)


def test_special_values():
    assert abs(modular_J(_tau(0, 1), 128).value - 1) < TOL
    with mpmath.workprec(160):
        rho = mpmath.exp(2j * mpmath.pi / 3)
    assert abs(modular_J(BigComplex.make(rho, 160), 128).value) < TOL


@pytest.mark.parametrize("re,im", [(0.1, 0.9), (0.3, 2.5), (-0.45, 1.1), (2.7, 0.2), (0, 4)])
def test_against_mpmath_kleinj(re, im):
    got = modular_J(_tau(re, im), 128).value
    with mpmath.workprec(200):
        ref = mpmath.kleinj(mpmath.mpc(re, im))
        assert abs(got - ref) <= mpmath.mpf(2) ** -90 * (1 + abs(ref))


def test_frozen_value_at_2i():
    # J(2i) = 66^3 / 1728
    with mpmath.workprec(160):
        assert abs(modular_J(_tau(0, 2), 128).value - mpmath.mpf(66) ** 3 / 1728) < mpmath.mpf(2) ** -90


GENERATORS = {"S": (0, -1, 1, 0), "T": (1, 1, 0, 1), "Ti": (1, -1, 0, 1)}


def _word_to_matrix(word):
    a, b, c, d = 1, 0, 0, 1
    for g in word:
        e, f, h, k = GENERATORS[g]
        a, b, c, d = a * e + b * h, a * f + b * k, c * e + d * h, c * f + d * k
    return a, b, c, d


sl2z = st.lists(st.sampled_from(sorted(GENERATORS)), min_size=1, max_size=10).map(_word_to_matrix)


@settings(max_examples=20)
@given(sl2z, st.floats(-0.5, 0.5), st.floats(0.5, 2.0))
def test_psl2_invariance(m, re, im):
    tau = _tau(re, im)
    moved = psl2_action(*m, tau)
    j0 = modular_J(tau, 96).value
    j1 = modular_J(moved, 96).value
    assert abs(j0 - j1) <= mpmath.mpf(2) ** -70 * (1 + abs(j0))


@given(st.floats(-3, 3), st.floats(0.05, 3))
def test_reduction_lands_in_fundamental_domain(re, im):
    with mpmath.workprec(128):
        t, _ = reduce_to_fundamental_domain(mpmath.mpc(re, im))
        assert abs(t.real) <= 0.5 + 1e-30
        assert abs(t) >= 1 - 1e-30


def test_preconditions():
    with pytest.raises(PreconditionError):
        modular_J(_tau(0, -1))
    with pytest.raises(PrecisionExhausted):
        modular_J(_tau(0, 1), 5000)
    with pytest.raises(PreconditionError):
        psl2_action(2, 0, 0, 1, _tau(0, 1))
    with pytest.raises(PreconditionError):
        PeriodPoint(_tau(0, 1), _tau(0, -2))


def test_sigma_pi_at_i_i():
    s, p = sigma_pi_from_periods(PeriodPoint(_tau(0, 1), _tau(0, 1)), 128)
    assert abs(s.value - 2) < TOL and abs(p.value - 1) < TOL


@given(st.floats(-0.5, 0.5), st.floats(0.8, 2), st.floats(-0.5, 0.5), st.floats(0.8, 2))
def test_swap_symmetry(r1, i1, r2, i2):
    pt = PeriodPoint(_tau(r1, i1), _tau(r2, i2))
    s, p = sigma_pi_from_periods(pt, 96)
    s2, p2 = sigma_pi_from_periods(pt.swapped(), 96)
    assert abs(s.value - s2.value) <= mpmath.mpf(2) ** -80 * (1 + abs(s.value))
    assert abs(p.value - p2.value) <= mpmath.mpf(2) ** -80 * (1 + abs(p.value))


@given(st.floats(-2, 2), st.floats(0.1, 3), st.floats(-2, 2), st.floats(0.1, 3))
def test_period_vector_relations(r1, i1, r2, i2):
    cert = period_vector_checks(PeriodPoint(_tau(r1, i1), _tau(r2, i2)))
    assert cert.ok
    assert cert.omega_omega_symbolic_zero
    with mpmath.workprec(160):
        assert abs(cert.omega_omegabar.value - 4 * mpmath.mpf(i1) * mpmath.mpf(i2)) < mpmath.mpf(2) ** -120
