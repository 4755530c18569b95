"""Pure numpy backend: scaled modified Bessel K and the fused integrand.

Mirrors the compiled backend in ``_fast.pyx`` function for function.  All
routines work on the scaled function ``ktilde = exp(x) * K_nu(x)`` so that
large arguments underflow only at the final unscaling step.

The general-order evaluation follows Temme's series for x <= 2 (Temme,
J. Comput. Phys. 19 (1975) 324) and the Steed/Thompson-Barnett continued
fraction CF2 for x > 2 (Thompson and Barnett, Comput. Phys. Commun. 47
(1987) 245), then recurs upward in the order, which is stable for K.
"""

import math

import numpy as np

KERNEL_NONE = 0
KERNEL_EXP_P = 1
KERNEL_EXP_PQ = 2
KERNEL_BESSEL = 3

_EPS = 2.220446049250313e-16
_MAXIT = 30000
_XMIN_CF2 = 2.0

# Taylor coefficients of 1/Gamma(z) = sum c_k z^k (Abramowitz & Stegun
# 6.1.34); via 1/Gamma(1+u) = sum c_{k+1} u^k they give full-precision
# gam1/gam2 where the direct difference of gammas would cancel.
_INVGAMMA_C = (
    1.0000000000000000,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
)


def _temme_gammas(mu):
    """gam1 = (1/G(1-mu) - 1/G(1+mu))/(2 mu), gam2 = the matching mean.

    Returns (gam1, gam2, 1/Gamma(1+mu), 1/Gamma(1-mu)) for |mu| <= 1/2.
    """
    c = _INVGAMMA_C
    if abs(mu) < 0.1:
        m2 = mu * mu
        gam1 = -(c[1] + m2 * (c[3] + m2 * (c[5] + m2 * (c[7] + m2 * (
            c[9] + m2 * (c[11] + m2 * c[13]))))))
        gam2 = c[0] + m2 * (c[2] + m2 * (c[4] + m2 * (c[6] + m2 * (
            c[8] + m2 * (c[10] + m2 * c[12])))))
    else:
        gp = 1.0 / math.gamma(1.0 + mu)
        gm = 1.0 / math.gamma(1.0 - mu)
        gam1 = (gm - gp) / (2.0 * mu)
        gam2 = (gm + gp) / 2.0
    gampl = gam2 - mu * gam1
    gammi = gam2 + mu * gam1
    return gam1, gam2, gampl, gammi


def _kv_temme_pair(mu, x):
    """Scaled (ktilde_mu, ktilde_{mu+1}) for array x <= 2, |mu| <= 1/2."""
    x2 = 0.5 * x
    pimu = math.pi * mu
    fact = 1.0 if abs(pimu) < 1e-15 else pimu / math.sin(pimu)
    d = -np.log(x2)
    e = mu * d
    fact2 = np.where(np.abs(e) < 1e-14, 1.0 + e * e / 6.0,
                     np.sinh(np.where(np.abs(e) < 1e-14, 0.0, e))
                     / np.where(np.abs(e) < 1e-14, 1.0, e))
    gam1, gam2, gampl, gammi = _temme_gammas(mu)
    ff = fact * (gam1 * np.cosh(e) + gam2 * fact2 * d)
    ksum = ff.copy()
    ee = np.exp(e)
    p = 0.5 * ee / gampl
    q = 0.5 / (ee * gammi)
    c = np.ones_like(x)
    d2 = x2 * x2
    ksum1 = p.copy()
    mu2 = mu * mu
    iters = 0
    for i in range(1, _MAXIT + 1):
        ff = (i * ff + p + q) / (i * i - mu2)
        c = c * d2 / i
        p = p / (i - mu)
        q = q / (i + mu)
        dl = c * ff
        ksum = ksum + dl
        dl1 = c * (p - i * ff)
        ksum1 = ksum1 + dl1
        iters = i
        if np.all(np.abs(dl) < np.abs(ksum) * _EPS):
            break
    scale = np.exp(x)
    return ksum * scale, ksum1 * (2.0 / x) * scale, iters


def _kv_cf2_pair(mu, x):
    """Scaled (ktilde_mu, ktilde_{mu+1}) for array x > 2, |mu| <= 1/2."""
    a1 = 0.25 - mu * mu
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(x)
    q2 = np.ones_like(x)
    q = np.full_like(x, a1)
    c = a1
    a = -a1
    s = 1.0 + q * delh
    iters = 0
    for i in range(2, _MAXIT + 1):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = h + delh
        dels = q * delh
        s = s + dels
        iters = i
        if np.all(np.abs(dels) < np.abs(s) * _EPS):
            break
    h = a1 * h
    kmu = np.sqrt(np.pi / (2.0 * x)) / s
    kmu1 = kmu * (mu + x + 0.5 - h) / x
    return kmu, kmu1, iters


def _kv_scaled_general(nu, x):
    """Scaled K for non-half-integer order nu >= 0, array x > 0."""
    nl = int(nu + 0.5)
    mu = nu - nl
    kmu = np.empty_like(x)
    kmu1 = np.empty_like(x)
    small = x <= _XMIN_CF2
    work = 0
    if np.any(small):
        xs = x[small]
        km, km1, it = _kv_temme_pair(mu, xs)
        kmu[small] = km
        kmu1[small] = km1
        work += it
    big = ~small
    if np.any(big):
        xb = x[big]
        km, km1, it = _kv_cf2_pair(mu, xb)
        kmu[big] = km
        kmu1[big] = km1
        work += it
    for j in range(nl):
        order = mu + j + 1
        kmu, kmu1 = kmu1, kmu + (2.0 * order / x) * kmu1
    return kmu, work + nl


def _kv_scaled_half(nu, x):
    """Scaled K for half-integer order via the closed-form seed.

    K_{1/2}(x) = sqrt(pi/(2x)) e^{-x} gives ktilde_{1/2} = sqrt(pi/(2x));
    the upward recurrence in the order is exact for the polynomial factors.
    """
    n = int(round(nu - 0.5))
    km = np.sqrt(np.pi / (2.0 * x))
    if n == 0:
        return km, 1
    kc = km * (1.0 + 1.0 / x)
    for j in range(1, n):
        order = j + 0.5
        km, kc = kc, km + (2.0 * order / x) * kc
    return kc, n


def kv_scaled_array(nu, x):
    """exp(x) * K_nu(x) elementwise: nu scalar >= 0, x array of positives.

    Returns (values, work).  Entries may be +inf when the scaled function
    itself exceeds the double range (tiny x with large order).
    """
    x = np.asarray(x, dtype=np.float64)
    if nu < 0.0:
        nu = -nu  # K_{-nu} = K_nu
    two = 2.0 * nu
    with np.errstate(over="ignore", invalid="ignore"):
        if two == math.floor(two) and int(two) % 2 == 1:
            return _kv_scaled_half(nu, x)
        return _kv_scaled_general(nu, x)


def kv_scaled(nu, x):
    """Scalar exp(x) * K_nu(x); returns (value, work)."""
    out, work = kv_scaled_array(nu, np.array([x], dtype=np.float64))
    return float(out[0]), work


def beta_kernel_values(t, tc, pt, ptc, ez, sigma, zs, kind, p, q, order):
    """Fused integrand on (0,1): t^pt tc^ptc e^{ez t} (1-zs t)^{-sigma} ker.

    t and tc carry the node and its complement, each accurate near its own
    endpoint.  ker is selected by kind: 1 -> exp(-p/(t tc)), 2 ->
    exp(-p/t - q/tc), 3 -> K_{order}(p/(t tc)), 0 -> 1.  Underflowing
    kernels mask the node to 0.0 before the powers are formed, so no
    spurious inf/nan leaks from the dead region near the endpoints.
    """
    with np.errstate(over="ignore", under="ignore", divide="ignore",
                     invalid="ignore"):
        expo = pt * np.log(t) + ptc * np.log(tc)
        if ez != 0.0:
            expo = expo + ez * t
        if sigma != 0.0:
            expo = expo - sigma * np.log1p(-zs * t)
        if kind == KERNEL_NONE:
            return np.exp(expo)
        if kind == KERNEL_EXP_P:
            return np.exp(expo - p / (t * tc))
        if kind == KERNEL_EXP_PQ:
            return np.exp(expo - p / t - q / tc)
        arg = p / (t * tc)
        expo = expo - arg
        out = np.zeros_like(t)
        live = expo > -746.0
        if np.any(live):
            kt, _ = kv_scaled_array(order, arg[live])
            out[live] = np.exp(expo[live]) * kt
        return out


BACKEND = "pure"
