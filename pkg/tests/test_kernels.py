"""Scalar kernel tests: gamma tower, Bessel K, classical series."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exwhit.errors import DomainError
from exwhit.kernels import (
    CompensatedSum,
    EvalResult,
    bessel_k,
    beta,
    gamma,
    gauss_2f1,
    kummer_phi,
    log_gamma,
    pochhammer,
    rel_dev,
)
from oracles import FROZEN


def test_gamma_frozen():
    assert rel_dev(gamma(7.3), FROZEN["gamma(7.3)"]) < 1e-14


def test_gamma_small_integers():
    assert gamma(1.0) == 1.0
    assert gamma(5.0) == 24.0


def test_gamma_pole_raises():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(DomainError):
            gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(172.0)


def test_log_gamma_frozen():
    assert rel_dev(log_gamma(10.5), FROZEN["log_gamma(10.5)"]) < 1e-14


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


@given(st.floats(min_value=0.1, max_value=40.0))
@settings(max_examples=80, deadline=None)
def test_gamma_recurrence(x):
    assert rel_dev(gamma(x + 1.0), x * gamma(x)) < 1e-13


@given(st.floats(min_value=0.2, max_value=20.0))
@settings(max_examples=80, deadline=None)
def test_gamma_duplication(x):
    # Legendre duplication through log space to dodge overflow
    lhs = log_gamma(2.0 * x)
    rhs = (2.0 * x - 1.0) * math.log(2.0) + log_gamma(x) \
        + log_gamma(x + 0.5) - 0.5 * math.log(math.pi)
    assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


def test_pochhammer_values():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 4) == 3.0 * 4.0 * 5.0 * 6.0
    assert pochhammer(-2.0, 3) == 0.0
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


def test_beta_frozen():
    assert rel_dev(beta(2.3, 4.1), FROZEN["beta(2.3,4.1)"]) < 1e-13


def test_beta_symmetry_exact():
    # the log-space form is symmetric by construction
    for a, b in [(0.3, 7.1), (2.3, 4.1), (11.0, 0.02)]:
        assert beta(a, b) == beta(b, a)


def test_beta_domain():
    with pytest.raises(DomainError):
        beta(-1.0, 2.0)
    with pytest.raises(DomainError):
        beta(1.0, 0.0)


@given(st.floats(min_value=0.05, max_value=30.0),
       st.floats(min_value=0.05, max_value=30.0))
@settings(max_examples=80, deadline=None)
def test_beta_gamma_consistency(a, b):
    want = math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))
    assert rel_dev(beta(a, b), want) < 1e-13


def test_bessel_k_half_closed_form():
    res = bessel_k(0.5, 1.0)
    assert res.converged
    want = math.sqrt(math.pi / 2.0) * math.exp(-1.0)
    assert rel_dev(res.value, want) < 1e-14
    assert rel_dev(res.value, FROZEN["bessel_k(0.5,1.0)"]) < 1e-13


def test_bessel_k_frozen():
    res = bessel_k(2.7, 3.3)
    assert res.converged
    assert rel_dev(res.value, FROZEN["bessel_k(2.7,3.3)"]) < 1e-11


def test_bessel_k_three_halves():
    # K_{3/2}(x) = sqrt(pi/(2x)) e^{-x} (1 + 1/x)
    for x in (0.3, 1.7, 12.0):
        want = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) * (1.0 + 1.0 / x)
        assert rel_dev(bessel_k(1.5, x).value, want) < 1e-13


@given(st.floats(min_value=0.0, max_value=5.0),
       st.floats(min_value=0.05, max_value=60.0))
@settings(max_examples=100, deadline=None)
def test_bessel_k_recurrence(v, x):
    # K_{v+1}(x) = K_{v-1}(x) + (2v/x) K_v(x), shifted so orders stay >= 0
    km = bessel_k(v, x).value
    k0 = bessel_k(v + 1.0, x).value
    kp = bessel_k(v + 2.0, x).value
    resid = abs(kp - km - (2.0 * (v + 1.0) / x) * k0)
    assert resid < 1e-10 * max(kp, 1e-300)


def test_bessel_k_underflow_converged_zero():
    res = bessel_k(0.5, 800.0)
    assert res.converged
    assert res.value == 0.0


def test_bessel_k_overflow():
    with pytest.raises(OverflowError):
        bessel_k(3.0, 1e-300)


def test_bessel_k_domain():
    with pytest.raises(DomainError):
        bessel_k(1.0, 0.0)
    with pytest.raises(DomainError):
        bessel_k(-0.5, 1.0)


def test_kummer_phi_e_minus_one():
    # Phi(1;2;1) = e - 1
    res = kummer_phi(1.0, 2.0, 1.0)
    assert res.converged
    assert rel_dev(res.value, math.e - 1.0) < 1e-14


def test_kummer_phi_frozen():
    res = kummer_phi(1.7, 3.4, 2.5)
    assert rel_dev(res.value, FROZEN["kummer_phi(1.7,3.4,2.5)"]) < 1e-12
    res = kummer_phi(1.5, 2.5, -3.0)
    assert rel_dev(res.value, FROZEN["kummer_phi(1.5,2.5,-3.0)"]) < 1e-12


def test_kummer_phi_at_zero():
    res = kummer_phi(1.3, 2.6, 0.0)
    assert res.value == 1.0
    assert res.converged


def test_kummer_transformation():
    # Phi(b;c;z) = e^z Phi(c-b;c;-z)
    for b, c, z in [(1.5, 3.2, 2.0), (0.7, 2.1, -4.0), (2.5, 6.0, 5.0)]:
        lhs = kummer_phi(b, c, z).value
        rhs = math.exp(z) * kummer_phi(c - b, c, -z).value
        assert rel_dev(lhs, rhs) < 1e-12


def test_kummer_phi_pole():
    with pytest.raises(DomainError):
        kummer_phi(1.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        kummer_phi(1.0, -3.0, 0.5)


def test_kummer_phi_error_estimate_honest():
    res = kummer_phi(1.7, 3.4, 2.5)
    assert abs(res.value - FROZEN["kummer_phi(1.7,3.4,2.5)"]) \
        <= 10.0 * res.abs_error_estimate + 1e-15 * abs(res.value)


def test_gauss_2f1_two_log_two():
    # 2F1(1,1;2;z) = -log(1-z)/z
    res = gauss_2f1(1.0, 1.0, 2.0, 0.5)
    assert rel_dev(res.value, 2.0 * math.log(2.0)) < 1e-13


def test_gauss_2f1_frozen():
    res = gauss_2f1(1.2, 2.1, 3.7, 0.4)
    assert rel_dev(res.value, FROZEN["gauss_2f1(1.2,2.1,3.7,0.4)"]) < 1e-12
    res = gauss_2f1(1.2, 2.1, 3.7, -0.6)
    assert rel_dev(res.value, FROZEN["gauss_2f1(1.2,2.1,3.7,-0.6)"]) < 1e-12


def test_gauss_2f1_euler_transformation():
    # (1-z)^{c-a-b} 2F1(c-a,c-b;c;z) = 2F1(a,b;c;z)
    for a, b, c, z in [(1.2, 2.1, 3.7, 0.4), (0.8, 1.1, 2.9, -0.7)]:
        lhs = gauss_2f1(a, b, c, z).value
        rhs = (1.0 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z).value
        assert rel_dev(lhs, rhs) < 1e-12


def test_gauss_2f1_domain():
    with pytest.raises(DomainError):
        gauss_2f1(1.0, 1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        gauss_2f1(1.0, 1.0, -2.0, 0.5)


def test_eval_result_validation():
    with pytest.raises(ValueError):
        EvalResult(1.0, -1e-3, True, 0)
    with pytest.raises(ValueError):
        EvalResult(math.inf, 0.0, True, 0)
    # non-converged results may be non-finite
    EvalResult(math.nan, 0.0, False, 0)


def test_eval_result_scaled():
    res = EvalResult(2.0, 1e-14, True, 7)
    out = res.scaled(-3.0)
    assert out.value == -6.0
    assert out.abs_error_estimate == 3e-14
    assert out.converged
    assert out.work == 7


def test_compensated_sum_beats_naive():
    xs = [1.0, 1e-16] * 100000
    acc = CompensatedSum()
    naive = 0.0
    for x in xs:
        acc.add(x)
        naive += x
    want = 100000.0 + 1e-11
    assert abs(acc.total - want) < 1e-12
    assert abs(acc.total - want) <= abs(naive - want)


def test_rel_dev_basics():
    assert rel_dev(1.0, 1.0) == 0.0
    assert rel_dev(0.0, 0.0) == 0.0
    assert rel_dev(2.0, 1.0) == 0.5
    assert rel_dev(1.0, 2.0) == 0.5
