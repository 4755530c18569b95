"""Extended confluent and Gauss hypergeometric functions.

Each member of the classical pair Phi(b; c; z), F(a, b; c; z) acquires
an extension by replacing the Euler-integral coefficient with one of
the extended betas:

    Phi_*(b; c; z) = sum_n [B_*(b + n, c - b) / B(b, c - b)] z^n / n!
    F_*(a, b; c; z) = sum_n (a)_n [B_*(b + n, c - b) / B(b, c - b)] z^n / n!

with B_* one of B_p, B_{p,q}, B_v(.; p).  The F family keeps the
classical disc of convergence |z| < 1; the Phi family is entire.
Coefficients are quadratures, so they are cached per (family, b, c,
parameters) and reused across orders and across z.

Every series function has an independent integral-representation
counterpart obtained by summing the series under the integral sign,
e.g. for the Bessel-kernel confluent case

    Phi_{p,v}(b; c; z) = sqrt(2p/pi) / B(b, c - b) *
        int_0^1 t^{b-3/2} (1-t)^{c-b-3/2} e^{zt} K_{v+1/2}(p/(t(1-t))) dt,

used by the verification suites as a second route to the same value.

References
----------
Chaudhry, M. A., Qadir, A., Rafique, M. & Zubair, S. M. (1997).
Extension of Euler's beta function. J. Comput. Appl. Math. 78, 19-32.
Chaudhry, M. A., Qadir, A., Srivastava, H. M. & Paris, R. B. (2004).
Extended hypergeometric and confluent hypergeometric functions.
Appl. Math. Comput. 159, 589-602.
"""

from __future__ import annotations

import math
import threading
import warnings
from collections import OrderedDict
from typing import Callable

from . import _core
from .errors import DomainError
from .kernels import CompensatedSum, EvalResult, beta, pochhammer
from .quadrature import QuadratureSpec, integrate_01

__all__ = [
    "phi_p",
    "phi_pq",
    "phi_pv_series",
    "phi_pv_integral",
    "phi_p_integral",
    "phi_pq_integral",
    "f_p",
    "f_pq",
    "f_pv_series",
    "f_pv_integral",
    "f_p_integral",
    "f_pq_integral",
    "phi_pv_transform_check",
    "phi_pv_derivative",
    "coef_cache_clear",
]

_TINY = 1e-300
_EPS = 2.220446049250313e-16
_MAX_TERMS = 100000
_SQRT_PI = math.sqrt(math.pi)
_STREAK = 5  # consecutive negligible terms required before stopping

# Coefficient quadratures run tighter than the default driver tolerance
# so series built on them can certify 1e-13 relative truncation.
_COEF_SPEC = QuadratureSpec(rel_tol=1e-13)


class _CoefficientCache:
    """Per-series memo of extended-beta coefficients.

    Values for one series key are stored in an append-only list indexed
    by the coefficient order n; evaluators walk n upward from 0, so the
    list never has holes.  Reads skip the lock (CPython list append is
    atomic); the lock serialises appends so concurrent evaluators of
    the same series cannot misalign the index.
    """

    def __init__(self, maxsize: int = 512):
        self._data: OrderedDict[tuple, list[EvalResult]] = OrderedDict()
        self._lock = threading.Lock()
        self._maxsize = maxsize

    def series(self, key: tuple) -> list[EvalResult]:
        with self._lock:
            lst = self._data.get(key)
            if lst is None:
                lst = []
                self._data[key] = lst
                if len(self._data) > self._maxsize:
                    self._data.popitem(last=False)
            else:
                self._data.move_to_end(key)
            return lst

    def ensure(
        self,
        lst: list[EvalResult],
        n: int,
        factory: Callable[[int], EvalResult],
    ) -> tuple[EvalResult, int]:
        """Return (coefficient n, new work units)."""
        if n < len(lst):
            return lst[n], 0
        coef = factory(n)  # computed outside the lock; idempotent
        with self._lock:
            if n < len(lst):
                return lst[n], 0
            lst.append(coef)
        return coef, coef.work

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_CACHE = _CoefficientCache()


def coef_cache_clear() -> None:
    """Drop all cached series coefficients (mainly for benchmarks)."""
    _CACHE.clear()


def _coef_factory(family, b, c, p, q, v, spec):
    from .ext_beta import beta_p, beta_pq, beta_v

    cb = c - b
    if family == "v":
        return lambda n: beta_v(b + n, cb, p, v, spec)
    if family == "pq":
        return lambda n: beta_pq(b + n, cb, p, q, spec)
    return lambda n: beta_p(b + n, cb, p, spec)


def _hyp_series(
    a: float | None,
    family: str,
    b: float,
    c: float,
    p: float,
    q: float,
    v: float,
    z: float,
    rel_tol: float,
    coef_spec: QuadratureSpec,
    max_terms: int,
) -> EvalResult:
    """Shared series driver for the Phi (a is None) and F families.

    The coefficients B_*(b + n, c - b)/B(b, c - b) are positive and
    strictly decreasing in n (raising n multiplies the integrand by
    t < 1), so the truncation tail is bounded by the last coefficient
    times a geometric weight sum.  Stopping additionally requires five
    consecutive terms below tolerance, which guards against a single
    accidentally small term in sign-alternating sums.
    """
    den = beta(b, c - b)
    key = (family, b, c, p, q, v, coef_spec)
    lst = _CACHE.series(key)
    factory = _coef_factory(family, b, c, p, q, v, coef_spec)

    acc = CompensatedSum()
    abs_sum = 0.0
    coef_err = 0.0
    weight = 1.0  # z^n / n!, times (a)_n for the F family
    tail = math.inf
    streak = 0
    converged = False
    coefs_ok = True
    work = 0
    n = 0
    while n < max_terms:
        coef, new_work = _CACHE.ensure(lst, n, factory)
        work += new_work
        coefs_ok = coefs_ok and coef.converged
        cval = coef.value / den
        term = weight * cval
        acc.add(term)
        abs_sum += abs(term)
        coef_err += abs(weight) * coef.abs_error_estimate / den
        weight *= z / (n + 1) * ((a + n) if a is not None else 1.0)
        n += 1
        if weight == 0.0:  # z = 0 or terminating F polynomial
            tail = 0.0
            converged = True
            break
        scale = max(abs(acc.total), _TINY)
        if abs(term) <= rel_tol * scale:
            streak += 1
        else:
            streak = 0
        if a is None:
            ratio = abs(z) / (n + 1)
        else:
            ratio = abs(z) * max((n + abs(a)) / (n + 1), 1.0)
        if ratio < 1.0:
            tail = cval * abs(weight) / (1.0 - ratio)
            if streak >= _STREAK and tail <= rel_tol * scale:
                converged = True
                break
        else:
            tail = math.inf
    total = acc.total
    if abs_sum > 1e6 * max(abs(total), _TINY):
        warnings.warn(
            f"series lost more than six digits to cancellation "
            f"(sum of |terms| / |sum| = {abs_sum / max(abs(total), _TINY):.2e})",
            RuntimeWarning,
            stacklevel=3,
        )
    err = coef_err + (0.0 if math.isinf(tail) else tail) + _EPS * abs_sum
    return EvalResult(total, err, converged and coefs_ok, n + work)


def _check_phi_args(b: float, c: float) -> None:
    if not (c > b > 0.0):
        raise DomainError(f"series requires c > b > 0, got b={b!r}, c={c!r}")


def _check_pv(p: float, v: float) -> None:
    if not (math.isfinite(p) and p >= 0.0):
        raise DomainError(f"p must be finite and >= 0, got {p!r}")
    if not (math.isfinite(v) and v >= 0.0):
        raise DomainError(f"v must be finite and >= 0, got {v!r}")
    if p == 0.0 and v != 0.0:
        raise DomainError(
            "p = 0 is only defined along the reduction chain v = 0"
        )


def phi_pv_series(
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Bessel-kernel extended confluent function Phi_{p,v}(b; c; z).

    Coefficients are B_v(b + n, c - b; p)/B(b, c - b) for p > 0.  The
    boundary p = 0 is reached along the reduction chain: it requires
    v = 0 and evaluates with classical beta coefficients, which equals
    Phi(b; c; z).
    """
    _check_phi_args(b, c)
    _check_pv(p, v)
    family = "v" if p > 0.0 else "p"
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(None, family, b, c, p, 0.0, v, z, rel_tol, spec,
                       max_terms)


def phi_p(
    b: float,
    c: float,
    p: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Extended confluent function Phi_p(b; c; z), exponential kernel."""
    _check_phi_args(b, c)
    if not (math.isfinite(p) and p >= 0.0):
        raise DomainError(f"p must be finite and >= 0, got {p!r}")
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(None, "p", b, c, p, 0.0, 0.0, z, rel_tol, spec,
                       max_terms)


def phi_pq(
    b: float,
    c: float,
    p: float,
    q: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Extended confluent function Phi_{p,q}(b; c; z), split kernel."""
    _check_phi_args(b, c)
    if not (p >= 0.0 and q >= 0.0):
        raise DomainError(f"p, q must be >= 0, got p={p!r}, q={q!r}")
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(None, "pq", b, c, p, q, 0.0, z, rel_tol, spec,
                       max_terms)


def _check_f_z(z: float) -> None:
    if not abs(z) < 1.0:
        raise DomainError(f"F-family series require |z| < 1, got z={z!r}")


def f_pv_series(
    a: float,
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Bessel-kernel extended Gauss function F_{p,v}(a, b; c; z), |z| < 1."""
    _check_phi_args(b, c)
    _check_pv(p, v)
    _check_f_z(z)
    family = "v" if p > 0.0 else "p"
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(a, family, b, c, p, 0.0, v, z, rel_tol, spec,
                       max_terms)


def f_p(
    a: float,
    b: float,
    c: float,
    p: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Extended Gauss function F_p(a, b; c; z), |z| < 1."""
    _check_phi_args(b, c)
    if not (math.isfinite(p) and p >= 0.0):
        raise DomainError(f"p must be finite and >= 0, got {p!r}")
    _check_f_z(z)
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(a, "p", b, c, p, 0.0, 0.0, z, rel_tol, spec, max_terms)


def f_pq(
    a: float,
    b: float,
    c: float,
    p: float,
    q: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Extended Gauss function F_{p,q}(a, b; c; z), |z| < 1."""
    _check_phi_args(b, c)
    if not (p >= 0.0 and q >= 0.0):
        raise DomainError(f"p, q must be >= 0, got p={p!r}, q={q!r}")
    _check_f_z(z)
    spec = coef_spec or _COEF_SPEC
    return _hyp_series(a, "pq", b, c, p, q, 0.0, z, rel_tol, spec, max_terms)


def _hyp_integral(
    a: float | None,
    b: float,
    c: float,
    kind: int,
    p: float,
    q: float,
    order: float,
    z: float,
    spec: QuadratureSpec | None,
) -> EvalResult:
    den = beta(b, c - b)
    if kind == _core.KERNEL_BESSEL:
        pt, ptc = b - 1.5, c - b - 1.5
        pref = math.sqrt(2.0 * p) / (_SQRT_PI * den)
    else:
        pt, ptc = b - 1.0, c - b - 1.0
        pref = 1.0 / den
    if a is None:
        ez, sigma, zs = z, 0.0, 0.0
    else:
        ez, sigma, zs = 0.0, a, z

    def f(t, tc):
        return _core.beta_kernel_values(t, tc, pt, ptc, ez, sigma, zs,
                                        kind, p, q, order)

    r = integrate_01(f, spec)
    return EvalResult(pref * r.value, pref * r.abs_error_estimate,
                      r.converged, r.nodes_used)


def phi_pv_integral(
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to Phi_{p,v}(b; c; z); requires p > 0."""
    _check_phi_args(b, c)
    if not p > 0.0:
        raise DomainError(f"phi_pv_integral requires p > 0, got {p!r}")
    if not v >= 0.0:
        raise DomainError(f"v must be >= 0, got {v!r}")
    return _hyp_integral(None, b, c, _core.KERNEL_BESSEL, p, 0.0, v + 0.5,
                         z, spec)


def f_pv_integral(
    a: float,
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to F_{p,v}(a, b; c; z); requires p > 0 and z < 1.

    The binomial factor (1 - zt)^{-a} stays positive on t in (0, 1) for
    any z < 1, so unlike the series this route extends to z <= -1.
    """
    _check_phi_args(b, c)
    if not p > 0.0:
        raise DomainError(f"f_pv_integral requires p > 0, got {p!r}")
    if not v >= 0.0:
        raise DomainError(f"v must be >= 0, got {v!r}")
    if not z < 1.0:
        raise DomainError(f"f_pv_integral requires z < 1, got {z!r}")
    return _hyp_integral(a, b, c, _core.KERNEL_BESSEL, p, 0.0, v + 0.5,
                         z, spec)


def phi_p_integral(
    b: float,
    c: float,
    p: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to Phi_p(b; c; z); p = 0 gives the classical case."""
    _check_phi_args(b, c)
    if not p >= 0.0:
        raise DomainError(f"p must be >= 0, got {p!r}")
    return _hyp_integral(None, b, c, _core.KERNEL_EXP_P, p, 0.0, 0.0, z, spec)


def f_p_integral(
    a: float,
    b: float,
    c: float,
    p: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to F_p(a, b; c; z); requires z < 1."""
    _check_phi_args(b, c)
    if not p >= 0.0:
        raise DomainError(f"p must be >= 0, got {p!r}")
    if not z < 1.0:
        raise DomainError(f"f_p_integral requires z < 1, got {z!r}")
    return _hyp_integral(a, b, c, _core.KERNEL_EXP_P, p, 0.0, 0.0, z, spec)


def phi_pq_integral(
    b: float,
    c: float,
    p: float,
    q: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to Phi_{p,q}(b; c; z)."""
    _check_phi_args(b, c)
    if not (p >= 0.0 and q >= 0.0):
        raise DomainError(f"p, q must be >= 0, got p={p!r}, q={q!r}")
    return _hyp_integral(None, b, c, _core.KERNEL_EXP_PQ, p, q, 0.0, z, spec)


def f_pq_integral(
    a: float,
    b: float,
    c: float,
    p: float,
    q: float,
    z: float,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral route to F_{p,q}(a, b; c; z); requires z < 1."""
    _check_phi_args(b, c)
    if not (p >= 0.0 and q >= 0.0):
        raise DomainError(f"p, q must be >= 0, got p={p!r}, q={q!r}")
    if not z < 1.0:
        raise DomainError(f"f_pq_integral requires z < 1, got {z!r}")
    return _hyp_integral(a, b, c, _core.KERNEL_EXP_PQ, p, q, 0.0, z, spec)


def phi_pv_transform_check(
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> float:
    """Relative deviation in the Kummer-type transformation.

    Returns |Phi_{p,v}(b; c; z) - e^z Phi_{p,v}(c - b; c; -z)| divided
    by |Phi_{p,v}(b; c; z)|.  Both sides are summed directly, so the
    identity is genuinely tested rather than assumed.
    """
    lhs = phi_pv_series(b, c, p, v, z, rel_tol, coef_spec).value
    rhs = math.exp(z) * phi_pv_series(c - b, c, p, v, -z, rel_tol,
                                      coef_spec).value
    return abs(lhs - rhs) / max(abs(lhs), _TINY)


def phi_pv_derivative(
    b: float,
    c: float,
    p: float,
    v: float,
    z: float,
    n: int,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """n-th derivative of Phi_{p,v}(b; c; z) in z.

    Term-by-term differentiation shifts both parameters:
    d^n/dz^n Phi_{p,v}(b; c; z) = ((b)_n / (c)_n)
    Phi_{p,v}(b + n; c + n; z).
    """
    if n != int(n) or n < 0:
        raise DomainError(f"derivative order must be an integer >= 0, got {n!r}")
    n = int(n)
    factor = pochhammer(b, n) / pochhammer(c, n)
    inner = phi_pv_series(b + n, c + n, p, v, z, rel_tol, coef_spec)
    return inner.scaled(factor)
