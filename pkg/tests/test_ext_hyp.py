"""Extended confluent and Gauss hypergeometric series tests."""

import math
import warnings

import pytest

from exwhit.errors import DomainError
from exwhit.ext_beta import beta_v
from exwhit.ext_hyp import (
    coef_cache_clear,
    f_p,
    f_p_integral,
    f_pq,
    f_pq_integral,
    f_pv_integral,
    f_pv_series,
    phi_p,
    phi_p_integral,
    phi_pq,
    phi_pq_integral,
    phi_pv_derivative,
    phi_pv_integral,
    phi_pv_series,
    phi_pv_transform_check,
)
from exwhit.kernels import beta, kummer_phi, rel_dev
from oracles import FROZEN


def test_phi_pv_frozen():
    res = phi_pv_series(1.5, 3.0, 0.8, 1.0, 2.0)
    assert res.converged
    assert rel_dev(res.value, FROZEN["phi_pv(1.5,3.0,0.8,1.0,2.0)"]) < 1e-11


def test_f_pv_frozen():
    res = f_pv_series(2.0, 1.5, 3.5, 0.7, 0.5, 0.3)
    assert res.converged
    assert rel_dev(res.value, FROZEN["f_pv(2.0,1.5,3.5,0.7,0.5,0.3)"]) < 1e-11


def test_phi_p_frozen():
    res = phi_p(1.2, 2.5, 0.6, 1.5)
    assert rel_dev(res.value, FROZEN["phi_p(1.2,2.5,0.6,1.5)"]) < 1e-11


def test_phi_pq_frozen():
    res = phi_pq(1.3, 2.8, 0.5, 0.2, -1.0)
    assert rel_dev(res.value, FROZEN["phi_pq(1.3,2.8,0.5,0.2,-1.0)"]) < 1e-11


def test_f_p_frozen():
    res = f_p(1.1, 0.9, 2.2, 0.4, 0.5)
    assert rel_dev(res.value, FROZEN["f_p(1.1,0.9,2.2,0.4,0.5)"]) < 1e-11


def test_f_pq_frozen():
    res = f_pq(1.5, 1.0, 2.5, 0.3, 0.6, 0.4)
    assert rel_dev(res.value, FROZEN["f_pq(1.5,1.0,2.5,0.3,0.6,0.4)"]) < 1e-11


def test_phi_pv_series_vs_integral():
    for b, c, p, v, z in [
        (1.5, 3.0, 0.8, 1.0, 2.0),
        (1.2, 2.9, 0.4, 0.5, -3.0),
        (2.0, 4.5, 1.5, 1.5, 0.7),
    ]:
        series = phi_pv_series(b, c, p, v, z).value
        integral = phi_pv_integral(b, c, p, v, z).value
        assert rel_dev(series, integral) < 1e-8


def test_f_pv_series_vs_integral():
    for a, b, c, p, v, z in [
        (2.0, 1.5, 3.5, 0.7, 0.5, 0.3),
        (1.1, 1.0, 2.6, 0.5, 1.0, -0.6),
    ]:
        series = f_pv_series(a, b, c, p, v, z).value
        integral = f_pv_integral(a, b, c, p, v, z).value
        assert rel_dev(series, integral) < 1e-8


def test_phi_p_and_pq_series_vs_integral():
    assert rel_dev(phi_p(1.2, 2.5, 0.6, 1.5).value,
                   phi_p_integral(1.2, 2.5, 0.6, 1.5).value) < 1e-8
    assert rel_dev(phi_pq(1.3, 2.8, 0.5, 0.2, -1.0).value,
                   phi_pq_integral(1.3, 2.8, 0.5, 0.2, -1.0).value) < 1e-8
    assert rel_dev(f_p(1.1, 0.9, 2.2, 0.4, 0.5).value,
                   f_p_integral(1.1, 0.9, 2.2, 0.4, 0.5).value) < 1e-8
    assert rel_dev(f_pq(1.5, 1.0, 2.5, 0.3, 0.6, 0.4).value,
                   f_pq_integral(1.5, 1.0, 2.5, 0.3, 0.6, 0.4).value) < 1e-8


def test_f_pv_integral_beyond_unit_disc():
    # the Euler-type integral keeps working left of z = -1 where the
    # series diverges; all we can assert there is internal stability
    res = f_pv_integral(1.5, 1.2, 3.0, 0.6, 0.5, -1.5)
    assert res.converged
    assert math.isfinite(res.value)
    assert res.value > 0.0


def test_phi_transformation_identity():
    for b, c, p, v, z in [
        (1.5, 3.0, 0.8, 1.0, 2.0),
        (1.1, 2.4, 0.3, 0.0, -4.0),
        (2.2, 5.0, 1.2, 2.0, 5.0),
    ]:
        assert phi_pv_transform_check(b, c, p, v, z) < 1e-9


def test_phi_value_at_origin():
    # Phi_{p,v}(b;c;0) collapses to the coefficient ratio
    res = phi_pv_series(1.5, 3.0, 0.8, 1.0, 0.0)
    want = beta_v(1.5, 1.5, 0.8, 1.0).value / beta(1.5, 1.5)
    assert rel_dev(res.value, want) < 1e-12


def test_reduction_to_classical_kummer():
    for b, c, z in [(1.5, 3.0, 2.0), (1.2, 2.5, -1.5)]:
        ext = phi_p(b, c, 0.0, z).value
        classical = kummer_phi(b, c, z).value
        assert rel_dev(ext, classical) < 1e-12


def test_reduction_v_zero_matches_exp_family():
    for b, c, p, z in [(1.5, 3.0, 0.8, 2.0), (1.2, 2.9, 0.4, -2.0)]:
        lhs = phi_pv_series(b, c, p, 0.0, z).value
        rhs = phi_p(b, c, p, z).value
        assert rel_dev(lhs, rhs) < 1e-9


def test_reduction_pq_equal_scales():
    lhs = phi_pq(1.3, 2.8, 0.5, 0.5, 1.0).value
    rhs = phi_p(1.3, 2.8, 0.5, 1.0).value
    assert rel_dev(lhs, rhs) < 1e-10


def test_derivative_against_finite_differences():
    b, c, p, v, z = 1.5, 3.0, 0.8, 1.0, 1.2

    def f(zz):
        return phi_pv_series(b, c, p, v, zz).value

    h = 0.01
    d_h = (f(z + h) - f(z - h)) / (2.0 * h)
    d_h2 = (f(z + h / 2) - f(z - h / 2)) / h
    richardson = (4.0 * d_h2 - d_h) / 3.0
    got = phi_pv_derivative(b, c, p, v, z, 1).value
    assert abs(got - richardson) < 1e-6 * max(1.0, abs(got))

    s_h = (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h)
    s_h2 = (f(z + h / 2) - 2.0 * f(z) + f(z - h / 2)) / (h * h / 4.0)
    richardson2 = (4.0 * s_h2 - s_h) / 3.0
    got2 = phi_pv_derivative(b, c, p, v, z, 2).value
    assert abs(got2 - richardson2) < 1e-4 * max(1.0, abs(got2))


def test_derivative_order_zero_is_identity():
    base = phi_pv_series(1.5, 3.0, 0.8, 1.0, 1.2)
    same = phi_pv_derivative(1.5, 3.0, 0.8, 1.0, 1.2, 0)
    assert rel_dev(base.value, same.value) < 1e-14


def test_coefficient_cache_reuse():
    coef_cache_clear()
    fresh = phi_pv_series(1.7, 3.3, 0.9, 1.0, 2.0)
    cached = phi_pv_series(1.7, 3.3, 0.9, 1.0, 2.0)
    assert cached.value == fresh.value
    assert cached.work < fresh.work


def test_cancellation_warning_on_deep_alternation():
    with pytest.warns(RuntimeWarning):
        phi_p(1.5, 2.5, 0.3, -35.0)


def test_domain_errors():
    with pytest.raises(DomainError):
        phi_pv_series(3.0, 2.0, 0.8, 1.0, 1.0)  # needs c > b
    with pytest.raises(DomainError):
        phi_pv_series(-0.5, 2.0, 0.8, 1.0, 1.0)  # needs b > 0
    with pytest.raises(DomainError):
        phi_pv_series(1.5, 3.0, 0.0, 1.0, 1.0)  # v > 0 needs p > 0
    with pytest.raises(DomainError):
        f_pv_series(1.0, 1.5, 3.0, 0.8, 1.0, 1.0)  # series needs |z| < 1
    with pytest.raises(DomainError):
        phi_pv_integral(1.5, 3.0, 0.0, 1.0, 1.0)  # Bessel route needs p > 0
    with pytest.raises(DomainError):
        f_pv_integral(1.0, 1.5, 3.0, 0.8, 1.0, 1.0)  # pole at z = 1


def test_error_estimate_honest():
    res = phi_pv_series(1.5, 3.0, 0.8, 1.0, 2.0)
    assert abs(res.value - FROZEN["phi_pv(1.5,3.0,0.8,1.0,2.0)"]) \
        <= 10.0 * res.abs_error_estimate + 1e-15
