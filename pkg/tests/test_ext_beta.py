"""Extended beta tower tests."""

import numpy as np
import pytest

from exwhit.errors import DomainError
from exwhit.ext_beta import beta_p, beta_pq, beta_v
from exwhit.kernels import beta, rel_dev
from exwhit.quadrature import QuadratureSpec
from oracles import FROZEN


def test_beta_p_frozen():
    res = beta_p(1.5, 2.5, 1.0)
    assert res.converged
    assert rel_dev(res.value, FROZEN["beta_p(1.5,2.5,1.0)"]) < 1e-11


def test_beta_p_negative_a_frozen():
    # p > 0 lifts the positivity constraint on the first argument
    res = beta_p(-0.5, 0.7, 0.8)
    assert res.converged
    assert rel_dev(res.value, FROZEN["beta_p(-0.5,0.7,0.8)"]) < 1e-11


def test_beta_pq_frozen():
    res = beta_pq(1.1, 3.3, 0.4, 0.9)
    assert res.converged
    assert rel_dev(res.value, FROZEN["beta_pq(1.1,3.3,0.4,0.9)"]) < 1e-11


def test_beta_v_frozen():
    res = beta_v(1.5, 2.5, 1.0, 1.0)
    assert res.converged
    assert rel_dev(res.value, FROZEN["beta_v(1.5,2.5,1.0,1.0)"]) < 1e-11


def test_beta_v_budget_insensitive():
    # doubling the budget must stay inside the combined error bars
    loose = beta_v(1.5, 2.5, 1.0, 1.0)
    tight = beta_v(1.5, 2.5, 1.0, 1.0,
                   spec=QuadratureSpec(rel_tol=1e-13, max_level=13))
    gap = abs(loose.value - tight.value)
    assert gap <= loose.abs_error_estimate + tight.abs_error_estimate + 1e-16


def test_beta_p_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(25):
        a, b = rng.uniform(0.4, 4.0, size=2)
        p = float(np.exp(rng.uniform(np.log(0.05), np.log(4.0))))
        lhs = beta_p(a, b, p).value
        rhs = beta_p(b, a, p).value
        assert rel_dev(lhs, rhs) < 1e-10


def test_beta_pq_swap_symmetry():
    # t -> 1-t swaps both the exponents and the two regulariser scales
    for a, b, p, q in [(1.1, 3.3, 0.4, 0.9), (0.7, 0.7, 1.2, 0.3)]:
        lhs = beta_pq(a, b, p, q).value
        rhs = beta_pq(b, a, q, p).value
        assert rel_dev(lhs, rhs) < 1e-10


def test_beta_v_symmetry():
    lhs = beta_v(1.2, 3.1, 0.8, 1.5).value
    rhs = beta_v(3.1, 1.2, 0.8, 1.5).value
    assert rel_dev(lhs, rhs) < 1e-10


def test_beta_pq_equal_scales_reduces_to_beta_p():
    # exp(-p/t - p/(1-t)) = exp(-p/(t(1-t)))
    for a, b, p in [(1.5, 2.5, 1.0), (0.8, 1.7, 0.3)]:
        lhs = beta_pq(a, b, p, p).value
        rhs = beta_p(a, b, p).value
        assert rel_dev(lhs, rhs) < 1e-10


def test_beta_v_order_zero_reduces_to_beta_p():
    # K_{1/2} collapses the Bessel kernel onto the exponential one
    for a, b, p in [(1.5, 2.5, 1.0), (2.2, 0.9, 0.6)]:
        lhs = beta_v(a, b, p, 0.0).value
        rhs = beta_p(a, b, p).value
        assert rel_dev(lhs, rhs) < 1e-10


def test_beta_p_zero_scale_is_exact_beta():
    for a, b in [(1.5, 2.5), (0.3, 6.0)]:
        res = beta_p(a, b, 0.0)
        assert res.value == beta(a, b)
        assert res.converged
        assert res.work == 0


def test_beta_pq_zero_scales_are_exact_beta():
    res = beta_pq(1.5, 2.5, 0.0, 0.0)
    assert res.value == beta(1.5, 2.5)


def test_beta_p_monotone_in_scale():
    values = [beta_p(1.5, 2.5, p).value for p in (0.1, 0.5, 1.0, 2.0, 4.0)]
    assert all(x > y for x, y in zip(values, values[1:]))
    assert all(v > 0.0 for v in values)


def test_beta_p_small_scale_continuity():
    base = beta(1.5, 2.5)
    res = beta_p(1.5, 2.5, 1e-6)
    assert abs(res.value - base) / base < 1e-2


def test_beta_p_huge_scale_underflows_to_zero():
    # exp(-4p) at the bridge peak is below the subnormal range
    res = beta_p(1.5, 2.5, 250.0)
    assert res.converged
    assert res.value == 0.0


def test_domain_errors():
    with pytest.raises(DomainError):
        beta_p(1.0, 1.0, -0.5)
    with pytest.raises(DomainError):
        beta_p(-0.5, 0.7, 0.0)  # p = 0 needs classical-domain a, b
    with pytest.raises(DomainError):
        beta_pq(1.0, 1.0, -0.1, 0.2)
    with pytest.raises(DomainError):
        beta_pq(-0.5, 1.0, 0.0, 0.5)  # p = 0 side needs a > 0
    with pytest.raises(DomainError):
        beta_pq(1.0, -0.5, 0.5, 0.0)  # q = 0 side needs b > 0
    with pytest.raises(DomainError):
        beta_v(1.0, 1.0, 0.0, 1.0)  # the Bessel variant needs p > 0
    with pytest.raises(DomainError):
        beta_v(1.0, 1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        beta_v(1.0, 1.0, 1.0, -0.5)


def test_error_estimate_honest():
    for key, res in [
        ("beta_p(1.5,2.5,1.0)", beta_p(1.5, 2.5, 1.0)),
        ("beta_pq(1.1,3.3,0.4,0.9)", beta_pq(1.1, 3.3, 0.4, 0.9)),
        ("beta_v(1.5,2.5,1.0,1.0)", beta_v(1.5, 2.5, 1.0, 1.0)),
    ]:
        assert abs(res.value - FROZEN[key]) \
            <= 10.0 * res.abs_error_estimate + 1e-16
