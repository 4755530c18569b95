"""Extended Whittaker functions of the first kind and their transforms.

The classical M_{lambda,rho}(z) = z^{rho+1/2} e^{-z/2}
Phi(rho - lambda + 1/2; 2 rho + 1; z) is extended by replacing the
confluent factor with the extended functions of :mod:`exwhit.ext_hyp`:

    M_{p,v,lambda,rho}(z) = z^{rho+1/2} e^{-z/2}
        Phi_{p,v}(rho - lambda + 1/2; 2 rho + 1; z)

together with the siblings built on Phi_p and Phi_{p,q}.  This module
also provides the five integral representations of M_{p,v,lambda,rho},
its Mellin transform in p (closed form and direct quadrature), the
Laplace transform in z, and the derivative identity, each implemented
as an independent route so the verification suites can compare them.

References
----------
Whittaker, E. T. & Watson, G. N. (1927). A Course of Modern Analysis,
4th ed., chapter 16.
Buchholz, H. (1969). The Confluent Hypergeometric Function. Springer.
Chaudhry, M. A. & Zubair, S. M. (2002). On a Class of Incomplete Gamma
Functions with Applications. Chapman & Hall/CRC.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _core
from .errors import DomainError
from .ext_hyp import (
    f_pv_series,
    phi_p,
    phi_pq,
    phi_pv_integral,
    phi_pv_series,
)
from .kernels import (
    EvalResult,
    beta,
    gamma,
    gauss_2f1,
    kummer_phi,
    pochhammer,
    rel_dev,
)
from .quadrature import (
    QuadratureSpec,
    QuadResult,
    integrate_finite,
    integrate_semi_inf,
)

__all__ = [
    "WhittakerParams",
    "MellinQuery",
    "m_classical",
    "m_p",
    "m_pq",
    "m_pv",
    "m_pv_alt",
    "m_pv_integral",
    "transform_check",
    "m_pv_derivative_formula",
    "bessel_moment",
    "bessel_moment_numeric",
    "mellin_closed_form",
    "mellin_closed_form_v0",
    "mellin_numeric",
    "laplace_closed_form",
    "laplace_closed_form_2f1",
    "laplace_numeric",
]

_SQRT_PI = math.sqrt(math.pi)
_EXP_DEAD = -746.0  # below this exponent the integrand underflows to 0

# Direct quadrature of the transforms: the outer rule tolerance, with
# inner series evaluations run three digits tighter (1e-12 floor) so
# inner noise stays below the outer convergence test.
_TRANSFORM_SPEC = QuadratureSpec(rel_tol=1e-7)

# Outside [p floor, p cut] the Mellin integrand in p is either below
# the double underflow threshold (the Bessel kernel argument exceeds
# 4 * 200 = 800) or contributes less than ~1e-15 relative mass for the
# supported exponent range r - v >= 0.3; see mellin_numeric.
_MELLIN_P_FLOOR = 1e-30
_MELLIN_P_CUT = 200.0


def _check_index(lam: float, rho: float) -> None:
    if not (math.isfinite(lam) and math.isfinite(rho)):
        raise DomainError("lam and rho must be finite")
    if not rho > -0.5:
        raise DomainError(f"rho must exceed -1/2, got {rho!r}")
    if not (rho - lam > -0.5 and rho + lam > -0.5):
        raise DomainError(
            f"rho +/- lam must exceed -1/2, got lam={lam!r}, rho={rho!r}"
        )


@dataclass(frozen=True)
class WhittakerParams:
    """Parameters (p, v, lambda, rho) of the extended Whittaker function.

    ``rho > -1/2`` and ``rho +/- lam > -1/2`` keep the underlying series
    parameters b = rho - lam + 1/2 and c = 2 rho + 1 in the admissible
    range c > b > 0.
    """

    p: float
    v: float
    lam: float
    rho: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p >= 0.0):
            raise DomainError(f"p must be finite and >= 0, got {self.p!r}")
        if not (math.isfinite(self.v) and self.v >= 0.0):
            raise DomainError(f"v must be finite and >= 0, got {self.v!r}")
        _check_index(self.lam, self.rho)

    @property
    def b(self) -> float:
        return self.rho - self.lam + 0.5

    @property
    def c(self) -> float:
        return 2.0 * self.rho + 1.0


@dataclass(frozen=True)
class MellinQuery:
    """A point (params, r, z) of the Mellin transform in p.

    The exponent window ``r - v > 0`` and ``r + v > -1`` makes the
    p-integral converge at both ends; ``rho + r +/- lam > 1/2`` keeps
    every beta argument of the closed forms positive.  The ``p`` field
    of ``params`` is ignored: p is the integration variable.
    """

    params: WhittakerParams
    r: float
    z: float

    def __post_init__(self):
        if not math.isfinite(self.r):
            raise DomainError("r must be finite")
        if not (math.isfinite(self.z) and self.z > 0.0):
            raise DomainError(f"z must be positive, got {self.z!r}")
        v = self.params.v
        if not self.r - v > 0.0:
            raise DomainError(f"need r - v > 0, got r={self.r!r}, v={v!r}")
        if not self.r + v > -1.0:
            raise DomainError(f"need r + v > -1, got r={self.r!r}, v={v!r}")
        lam, rho = self.params.lam, self.params.rho
        if not (rho + self.r - lam > 0.5 and rho + self.r + lam > 0.5):
            raise DomainError(
                f"need rho + r +/- lam > 1/2, got r={self.r!r}, "
                f"lam={lam!r}, rho={rho!r}"
            )


def _shell(z: float, rho: float, sign: float) -> float:
    """z^{rho + 1/2} e^{sign * z / 2} for z > 0."""
    return z ** (rho + 0.5) * math.exp(sign * 0.5 * z)


def _check_z(z: float) -> None:
    if not (math.isfinite(z) and z > 0.0):
        raise DomainError(f"z must be positive, got {z!r}")


def m_classical(
    lam: float,
    rho: float,
    z: float,
    rel_tol: float = 1e-14,
) -> EvalResult:
    """Classical Whittaker function M_{lam,rho}(z) for z > 0.

    M_{lam,rho}(z) = z^{rho+1/2} e^{-z/2} Phi(rho - lam + 1/2;
    2 rho + 1; z)  (DLMF 13.14.2).
    """
    _check_index(lam, rho)
    _check_z(z)
    inner = kummer_phi(rho - lam + 0.5, 2.0 * rho + 1.0, z, rel_tol)
    return inner.scaled(_shell(z, rho, -1.0))


def m_pv(
    params: WhittakerParams,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Extended Whittaker function M_{p,v,lam,rho}(z), series route."""
    _check_z(z)
    inner = phi_pv_series(params.b, params.c, params.p, params.v, z,
                          rel_tol, coef_spec)
    return inner.scaled(_shell(z, params.rho, -1.0))


def m_pv_alt(
    params: WhittakerParams,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Alternate form z^{rho+1/2} e^{+z/2} Phi_{p,v}(rho + lam + 1/2;
    2 rho + 1; -z).

    Equal to :func:`m_pv` through the Kummer-type transformation of
    Phi_{p,v}; summed independently (alternating series), so the two
    routes genuinely cross-check each other.
    """
    _check_z(z)
    inner = phi_pv_series(params.rho + params.lam + 0.5, params.c,
                          params.p, params.v, -z, rel_tol, coef_spec)
    return inner.scaled(_shell(z, params.rho, 1.0))


def m_p(
    p: float,
    lam: float,
    rho: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Extended Whittaker sibling built on Phi_p."""
    _check_index(lam, rho)
    _check_z(z)
    inner = phi_p(rho - lam + 0.5, 2.0 * rho + 1.0, p, z, rel_tol, coef_spec)
    return inner.scaled(_shell(z, rho, -1.0))


def m_pq(
    p: float,
    q: float,
    lam: float,
    rho: float,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Extended Whittaker sibling built on Phi_{p,q}."""
    _check_index(lam, rho)
    _check_z(z)
    inner = phi_pq(rho - lam + 0.5, 2.0 * rho + 1.0, p, q, z,
                   rel_tol, coef_spec)
    return inner.scaled(_shell(z, rho, -1.0))


def _bessel_quad_result(pref: float, r: QuadResult) -> EvalResult:
    return EvalResult(pref * r.value, abs(pref) * r.abs_error_estimate,
                      r.converged, r.nodes_used)


def m_pv_integral(
    params: WhittakerParams,
    z: float,
    rep: int,
    a: float | None = None,
    b: float | None = None,
    spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Integral representations of M_{p,v,lam,rho}(z); requires p > 0.

    rep = 1 : Euler-type integral over (0, 1) against e^{zt}.
    rep = 2 : mirror of rep 1 with e^{-zu} and the power roles of u and
              1 - u exchanged (the e^{+z/2} shell).
    rep = 3 : rep 1 transplanted to an arbitrary interval (a, b) by the
              affine substitution t = (u - a)/(b - a); carries the
              prefactor (b - a)^{1 - 2 rho}.
    rep = 4 : rep 1 pushed to (0, inf) by t = u/(1 + u).
    rep = 5 : the symmetric interval special case, delegated to rep 3
              with (a, b) = (-1, 1).

    All five multiply sqrt(2p) / (sqrt(pi) B(rho - lam + 1/2,
    rho + lam + 1/2)) and the appropriate shell z^{rho+1/2} e^{-+z/2}.
    """
    _check_z(z)
    p, v, lam, rho = params.p, params.v, params.lam, params.rho
    if not p > 0.0:
        raise DomainError(f"integral representations require p > 0, got {p!r}")
    if rep == 5:
        return m_pv_integral(params, z, 3, -1.0, 1.0, spec)
    b0 = params.b
    c0 = params.c
    base = math.sqrt(2.0 * p) / (_SQRT_PI * beta(b0, c0 - b0))
    order = v + 0.5

    if rep == 1:
        inner = phi_pv_integral(b0, c0, p, v, z, spec)
        return inner.scaled(_shell(z, rho, -1.0))
    if rep == 2:
        inner = phi_pv_integral(rho + lam + 0.5, c0, p, v, -z, spec)
        return inner.scaled(_shell(z, rho, 1.0))
    if rep == 3:
        if a is None or b is None:
            raise DomainError("rep = 3 needs the interval endpoints a and b")
        if not b > a:
            raise DomainError(f"rep = 3 needs b > a, got a={a!r}, b={b!r}")
        width = b - a
        w2 = width * width

        def f3(u, uma, bmu):
            with np.errstate(over="ignore", invalid="ignore",
                             divide="ignore"):
                arg = p * w2 / (uma * bmu)
                expo = ((rho - lam - 1.0) * np.log(uma)
                        + (rho + lam - 1.0) * np.log(bmu)
                        + z * (uma / width) - arg)
                out = np.zeros_like(u)
                live = expo > _EXP_DEAD
                if live.any():
                    kt, _ = _core.kv_scaled_array(order, arg[live])
                    out[live] = np.exp(expo[live]) * kt
            return out

        r = integrate_finite(f3, a, b, spec)
        pref = width ** (1.0 - 2.0 * rho) * _shell(z, rho, -1.0) * base
        return _bessel_quad_result(pref, r)
    if rep == 4:

        def f4(x):
            with np.errstate(over="ignore", invalid="ignore",
                             divide="ignore"):
                opx = 1.0 + x
                arg = p * opx * opx / x
                expo = ((rho - lam - 1.0) * np.log(x)
                        - 2.0 * rho * np.log1p(x)
                        + z * (x / opx) - arg)
                out = np.zeros_like(x)
                live = expo > _EXP_DEAD
                if live.any():
                    kt, _ = _core.kv_scaled_array(order, arg[live])
                    out[live] = np.exp(expo[live]) * kt
            return out

        r = integrate_semi_inf(f4, spec, split_at=1.0)
        return _bessel_quad_result(_shell(z, rho, -1.0) * base, r)
    raise DomainError(f"rep must be one of 1..5, got {rep!r}")


def transform_check(
    params: WhittakerParams,
    z: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> float:
    """Relative deviation between :func:`m_pv` and :func:`m_pv_alt`."""
    lhs = m_pv(params, z, rel_tol, coef_spec).value
    rhs = m_pv_alt(params, z, rel_tol, coef_spec).value
    return rel_dev(lhs, rhs)


def m_pv_derivative_formula(
    params: WhittakerParams,
    z: float,
    n: int,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Closed form of d^n/dz^n [e^{z/2} z^{-rho-1/2} M_{p,v,lam,rho}(z)].

    The derivative shifts the indices:

        ((rho - lam + 1/2)_n / (2 rho + 1)_n) e^{z/2} z^{-rho-n/2-1/2}
            M_{p,v,lam-n/2,rho+n/2}(z).

    The shifted parameters are always admissible: (rho + n/2) +/-
    (lam - n/2) equals rho + lam and rho - lam + n.
    """
    if n != int(n) or n < 0:
        raise DomainError(f"derivative order must be an integer >= 0, got {n!r}")
    n = int(n)
    _check_z(z)
    shifted = WhittakerParams(params.p, params.v, params.lam - 0.5 * n,
                              params.rho + 0.5 * n)
    ratio = pochhammer(params.b, n) / pochhammer(params.c, n)
    inner = m_pv(shifted, z, rel_tol, coef_spec)
    factor = ratio * math.exp(0.5 * z) * z ** (-params.rho - 0.5 * n - 0.5)
    return inner.scaled(factor)


def bessel_moment(r: float, v: float) -> float:
    """Closed form of int_0^inf u^{r - 1/2} K_{v+1/2}(u) du.

    Equals 2^{r - 3/2} Gamma((r - v)/2) Gamma((r + v + 1)/2) for
    r - v > 0 and r + v > -1 (DLMF 10.43.19).  This is the kernel
    moment behind the Mellin transform's closed form.
    """
    if not (r - v > 0.0 and r + v > -1.0):
        raise DomainError(
            f"moment needs r - v > 0 and r + v > -1, got r={r!r}, v={v!r}"
        )
    return (2.0 ** (r - 1.5) * gamma(0.5 * (r - v))
            * gamma(0.5 * (r + v + 1.0)))


def bessel_moment_numeric(
    r: float,
    v: float,
    spec: QuadratureSpec | None = None,
) -> QuadResult:
    """Direct quadrature of int_0^inf u^{r - 1/2} K_{v+1/2}(u) du.

    The integrand behaves like u^{r - v - 1} near 0 and decays like
    e^{-u} at infinity; nodes outside [1e-40, 760] are dropped, which
    for r - v >= 0.3 discards less than ~1e-12 relative mass.
    """
    if not (r - v > 0.0 and r + v > -1.0):
        raise DomainError(
            f"moment needs r - v > 0 and r + v > -1, got r={r!r}, v={v!r}"
        )
    order = v + 0.5

    def f(u):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = np.zeros_like(u)
            live = (u > 1e-40) & (u < 760.0)
            if live.any():
                ul = u[live]
                kt, _ = _core.kv_scaled_array(order, ul)
                out[live] = np.exp((r - 0.5) * np.log(ul) - ul) * kt
        return out

    return integrate_semi_inf(f, spec, split_at=1.0)


def mellin_closed_form(
    query: MellinQuery,
    paper_literal: bool = False,
    rel_tol: float = 1e-14,
) -> EvalResult:
    """Closed form of int_0^inf p^{r-1} M_{p,v,lam,rho}(z) dp.

    The corrected closed form is

        z^{rho+1/2} e^{-z/2} 2^{r-1} Gamma((r-v)/2) Gamma((r+v+1)/2)
        * B(rho + r - lam + 1/2, rho + r + lam + 1/2)
          / (sqrt(pi) B(rho - lam + 1/2, rho + lam + 1/2))
        * Phi(rho + r - lam + 1/2; 2 rho + 2 r + 1; z).

    ``paper_literal = True`` instead evaluates the formula with the
    uncorrected exponents (z^{rho+1/2-r}, beta arguments shifted by
    -1/2, denominator parameter 2 rho + 2 r): it is dimensionally
    inconsistent with the r-th Mellin moment and fails against the
    direct quadrature; it is kept purely as a diagnostic.
    """
    v = query.params.v
    lam, rho = query.params.lam, query.params.rho
    r, z = query.r, query.z
    gg = gamma(0.5 * (r - v)) * gamma(0.5 * (r + v + 1.0))
    den = _SQRT_PI * beta(rho - lam + 0.5, rho + lam + 0.5)
    if paper_literal:
        pref = (z ** (rho + 0.5 - r) * math.exp(-0.5 * z)
                * 2.0 ** (r - 1.0) * gg
                * beta(rho + r - lam - 0.5, rho + r + lam - 0.5) / den)
        inner = kummer_phi(rho + r - lam - 0.5, 2.0 * rho + 2.0 * r, z,
                           rel_tol)
    else:
        pref = (z ** (rho + 0.5) * math.exp(-0.5 * z)
                * 2.0 ** (r - 1.0) * gg
                * beta(rho + r - lam + 0.5, rho + r + lam + 0.5) / den)
        inner = kummer_phi(rho + r - lam + 0.5, 2.0 * rho + 2.0 * r + 1.0,
                           z, rel_tol)
    return inner.scaled(pref)


def mellin_closed_form_v0(
    lam: float,
    rho: float,
    r: float,
    z: float,
    rel_tol: float = 1e-14,
) -> EvalResult:
    """Mellin transform at v = 0, reduced to a classical Whittaker value.

    int_0^inf p^{r-1} M_{p,0,lam,rho}(z) dp = z^{-r} Gamma(r)
    B(rho + r - lam + 1/2, rho + r + lam + 1/2) / B(rho - lam + 1/2,
    rho + lam + 1/2) * M_{lam, rho+r}(z).  Consistent with the general
    closed form through the Legendre duplication of Gamma(r).
    """
    query = MellinQuery(WhittakerParams(0.0, 0.0, lam, rho), r, z)
    lam, rho, r, z = query.params.lam, query.params.rho, query.r, query.z
    pref = (z ** (-r) * gamma(r)
            * beta(rho + r - lam + 0.5, rho + r + lam + 0.5)
            / beta(rho - lam + 0.5, rho + lam + 0.5))
    inner = m_classical(lam, rho + r, z, rel_tol)
    return inner.scaled(pref)


def mellin_numeric(
    query: MellinQuery,
    spec: QuadratureSpec | None = None,
) -> QuadResult:
    """Direct quadrature of int_0^inf p^{r-1} M_{p,v,lam,rho}(z) dp.

    Each node evaluates the series route of M at that p, three digits
    tighter than the outer tolerance.  Nodes with p below 1e-30
    (integrand ~ p^{r-v-1}, under 1e-15 of the total for r - v >= 0.3)
    or above 200 (Bessel kernel argument past 800, value underflows to
    zero) are skipped; accuracy therefore degrades as r - v approaches
    0, which the sampling domains avoid.
    """
    spec = spec or _TRANSFORM_SPEC
    tol_inner = max(1e-12, spec.rel_tol * 1e-3)
    inner_spec = QuadratureSpec(rel_tol=tol_inner)
    v = query.params.v
    lam, rho = query.params.lam, query.params.rho
    r, z = query.r, query.z

    def f(parr):
        out = np.zeros_like(parr)
        idx = np.nonzero((parr >= _MELLIN_P_FLOOR)
                         & (parr <= _MELLIN_P_CUT))[0]
        for i in idx:
            pv_ = float(parr[i])
            m = m_pv(WhittakerParams(pv_, v, lam, rho), z,
                     rel_tol=tol_inner, coef_spec=inner_spec)
            out[i] = math.exp((r - 1.0) * math.log(pv_)) * m.value
        return out

    return integrate_semi_inf(f, spec, split_at=1.0)


def _check_laplace(params: WhittakerParams, delta: float, alpha: float,
                   mu: float) -> None:
    if not (math.isfinite(alpha) and math.isfinite(mu)
            and 2.0 * alpha > mu > 0.0):
        raise DomainError(
            f"need 2 alpha > mu > 0, got alpha={alpha!r}, mu={mu!r}"
        )
    if not (math.isfinite(delta) and delta + params.rho > -0.5):
        raise DomainError(
            f"need delta + rho > -1/2, got delta={delta!r}, rho={params.rho!r}"
        )


def laplace_closed_form(
    params: WhittakerParams,
    delta: float,
    alpha: float,
    mu: float,
    rel_tol: float = 1e-13,
    coef_spec: QuadratureSpec | None = None,
) -> EvalResult:
    """Closed form of int_0^inf x^{delta-1} e^{-alpha x}
    M_{p,v,lam,rho}(mu x) dx.

    Equals Gamma(delta + rho + 1/2) mu^{rho+1/2}
    (alpha + mu/2)^{-delta-rho-1/2} F_{p,v}(delta + rho + 1/2,
    rho - lam + 1/2; 2 rho + 1; 2 mu / (2 alpha + mu)) for
    2 alpha > mu > 0 and delta + rho > -1/2.
    """
    _check_laplace(params, delta, alpha, mu)
    s = delta + params.rho + 0.5
    arg = 2.0 * mu / (2.0 * alpha + mu)
    inner = f_pv_series(s, params.b, params.c, params.p, params.v, arg,
                        rel_tol, coef_spec)
    pref = gamma(s) * mu ** (params.rho + 0.5) * (alpha + 0.5 * mu) ** (-s)
    return inner.scaled(pref)


def laplace_closed_form_2f1(
    lam: float,
    rho: float,
    delta: float,
    alpha: float,
    mu: float,
    rel_tol: float = 1e-14,
) -> EvalResult:
    """Laplace transform of the classical M_{lam,rho}(mu x) via 2F1.

    The p = 0, v = 0 reduction of :func:`laplace_closed_form`: the
    F_{p,v} factor collapses to 2F1(delta + rho + 1/2, rho - lam + 1/2;
    2 rho + 1; 2 mu / (2 alpha + mu)), summed by the classical series.
    """
    params = WhittakerParams(0.0, 0.0, lam, rho)
    _check_laplace(params, delta, alpha, mu)
    s = delta + rho + 0.5
    arg = 2.0 * mu / (2.0 * alpha + mu)
    inner = gauss_2f1(s, rho - lam + 0.5, 2.0 * rho + 1.0, arg, rel_tol)
    pref = gamma(s) * mu ** (rho + 0.5) * (alpha + 0.5 * mu) ** (-s)
    return inner.scaled(pref)


def laplace_numeric(
    params: WhittakerParams,
    delta: float,
    alpha: float,
    mu: float,
    spec: QuadratureSpec | None = None,
) -> QuadResult:
    """Direct quadrature of int_0^inf x^{delta-1} e^{-alpha x}
    M_{p,v,lam,rho}(mu x) dx.

    Nodes are dropped once mu x exceeds 690 (the confluent series of M
    would overflow) or once (alpha - mu/2) x exceeds 400 (the envelope
    e^{-(alpha - mu/2) x} is below 1e-173); results are therefore
    reliable when alpha - mu/2 is not too close to 0, as in the sampled
    verification domains.
    """
    _check_laplace(params, delta, alpha, mu)
    spec = spec or _TRANSFORM_SPEC
    tol_inner = max(1e-12, spec.rel_tol * 1e-3)
    inner_spec = QuadratureSpec(rel_tol=tol_inner)
    decay = alpha - 0.5 * mu

    def f(xarr):
        out = np.zeros_like(xarr)
        idx = np.nonzero((xarr > 1e-30) & (mu * xarr < 690.0)
                         & (decay * xarr < 400.0))[0]
        for i in idx:
            x = float(xarr[i])
            m = m_pv(params, mu * x, rel_tol=tol_inner,
                     coef_spec=inner_spec)
            out[i] = math.exp((delta - 1.0) * math.log(x)
                              - alpha * x) * m.value
        return out

    return integrate_semi_inf(f, spec, split_at=1.0)
