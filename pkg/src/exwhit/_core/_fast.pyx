# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled core: scaled modified Bessel K and the fused integrand.

Scalar counterpart of ``pure.py``; same algorithms (Temme series for
x <= 2, Steed/Thompson-Barnett CF2 for x > 2, upward order recurrence,
half-integer closed-form seed), evaluated per node without array
temporaries.
"""

from libc.math cimport (M_PI, exp, fabs, floor, log, log1p, sin, sinh,
                        cosh, sqrt, tgamma, INFINITY)

import numpy as np

KERNEL_NONE = 0
KERNEL_EXP_P = 1
KERNEL_EXP_PQ = 2
KERNEL_BESSEL = 3

BACKEND = "compiled"

cdef double EPS = 2.220446049250313e-16
cdef int MAXIT = 30000

cdef double _C[15]
_C[0] = 1.0000000000000000
_C[1] = 0.5772156649015329
_C[2] = -0.6558780715202538
_C[3] = -0.0420026350340952
_C[4] = 0.1665386113822915
_C[5] = -0.0421977345555443
_C[6] = -0.0096219715278770
_C[7] = 0.0072189432466630
_C[8] = -0.0011651675918591
_C[9] = -0.0002152416741149
_C[10] = 0.0001280502823882
_C[11] = -0.0000201348547807
_C[12] = -0.0000012504934821
_C[13] = 0.0000011330272320
_C[14] = -0.0000002056338417


cdef void _temme_gammas(double mu, double* gam1, double* gam2,
                        double* gampl, double* gammi) nogil:
    cdef double m2
    if fabs(mu) < 0.1:
        m2 = mu * mu
        gam1[0] = -(_C[1] + m2 * (_C[3] + m2 * (_C[5] + m2 * (_C[7] + m2 * (
            _C[9] + m2 * (_C[11] + m2 * _C[13]))))))
        gam2[0] = _C[0] + m2 * (_C[2] + m2 * (_C[4] + m2 * (_C[6] + m2 * (
            _C[8] + m2 * (_C[10] + m2 * _C[12])))))
    else:
        gam1[0] = (1.0 / tgamma(1.0 - mu) - 1.0 / tgamma(1.0 + mu)) / (2.0 * mu)
        gam2[0] = (1.0 / tgamma(1.0 - mu) + 1.0 / tgamma(1.0 + mu)) / 2.0
    gampl[0] = gam2[0] - mu * gam1[0]
    gammi[0] = gam2[0] + mu * gam1[0]


cdef int _kv_pair(double mu, double x, double* kmu, double* kmu1) nogil:
    """Scaled (ktilde_mu, ktilde_{mu+1}) at |mu| <= 1/2; returns iterations."""
    cdef double x2, pimu, fact, d, e, fact2, gam1, gam2, gampl, gammi
    cdef double ff, ksum, ee, p, q, c, d2, ksum1, mu2, dl, dl1, scale
    cdef double a1, b, dd, h, delh, q1, q2, qq, cc, a, s, qnew, dels
    cdef int i
    if x <= 2.0:
        x2 = 0.5 * x
        pimu = M_PI * mu
        fact = 1.0 if fabs(pimu) < 1e-15 else pimu / sin(pimu)
        d = -log(x2)
        e = mu * d
        fact2 = 1.0 + e * e / 6.0 if fabs(e) < 1e-14 else sinh(e) / e
        _temme_gammas(mu, &gam1, &gam2, &gampl, &gammi)
        ff = fact * (gam1 * cosh(e) + gam2 * fact2 * d)
        ksum = ff
        ee = exp(e)
        p = 0.5 * ee / gampl
        q = 0.5 / (ee * gammi)
        c = 1.0
        d2 = x2 * x2
        ksum1 = p
        mu2 = mu * mu
        for i in range(1, MAXIT + 1):
            ff = (i * ff + p + q) / (i * i - mu2)
            c = c * d2 / i
            p = p / (i - mu)
            q = q / (i + mu)
            dl = c * ff
            ksum = ksum + dl
            dl1 = c * (p - i * ff)
            ksum1 = ksum1 + dl1
            if fabs(dl) < fabs(ksum) * EPS:
                break
        scale = exp(x)
        kmu[0] = ksum * scale
        kmu1[0] = ksum1 * (2.0 / x) * scale
        return i
    a1 = 0.25 - mu * mu
    b = 2.0 * (1.0 + x)
    dd = 1.0 / b
    h = dd
    delh = dd
    q1 = 0.0
    q2 = 1.0
    qq = a1
    cc = a1
    a = -a1
    s = 1.0 + qq * delh
    for i in range(2, MAXIT + 1):
        a -= 2 * (i - 1)
        cc = -a * cc / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        qq = qq + cc * qnew
        b = b + 2.0
        dd = 1.0 / (b + a * dd)
        delh = (b * dd - 1.0) * delh
        h = h + delh
        dels = qq * delh
        s = s + dels
        if fabs(dels) < fabs(s) * EPS:
            break
    h = a1 * h
    kmu[0] = sqrt(M_PI / (2.0 * x)) / s
    kmu1[0] = kmu[0] * (mu + x + 0.5 - h) / x
    return i


cdef double _kv_scaled_one(double nu, double x, int* work) nogil:
    cdef double two, km, kc, tmp, kmu, kmu1, order
    cdef int n, j, nl, it
    if nu < 0.0:
        nu = -nu
    two = 2.0 * nu
    if two == floor(two) and (<long> two) % 2 == 1:
        n = <int> ((two - 1.0) / 2.0)
        km = sqrt(M_PI / (2.0 * x))
        work[0] = work[0] + (n if n > 0 else 1)
        if n == 0:
            return km
        kc = km * (1.0 + 1.0 / x)
        for j in range(1, n):
            tmp = km + (2.0 * (j + 0.5) / x) * kc
            km = kc
            kc = tmp
        return kc
    nl = <int> (nu + 0.5)
    it = _kv_pair(nu - nl, x, &kmu, &kmu1)
    work[0] = work[0] + it + nl
    for j in range(nl):
        order = (nu - nl) + j + 1
        tmp = kmu + (2.0 * order / x) * kmu1
        kmu = kmu1
        kmu1 = tmp
    return kmu


def kv_scaled(double nu, double x):
    """Scalar exp(x) * K_nu(x); returns (value, work)."""
    cdef int work = 0
    cdef double v = _kv_scaled_one(nu, x, &work)
    return v, work


def kv_scaled_array(nu, x):
    """exp(x) * K_nu(x) elementwise; returns (values, work)."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef int work = 0
    cdef Py_ssize_t i
    cdef double dnu = nu
    for i in range(xv.shape[0]):
        ov[i] = _kv_scaled_one(dnu, xv[i], &work)
    return out, work


def beta_kernel_values(t, tc, double pt, double ptc, double ez, double sigma,
                       double zs, int kind, double p, double q, double order):
    """Fused integrand on (0,1); see the pure backend for the contract."""
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef double[::1] cv = np.ascontiguousarray(tc, dtype=np.float64)
    out = np.empty(tv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    cdef double ti, ci, expo, arg
    cdef int work = 0
    for i in range(tv.shape[0]):
        ti = tv[i]
        ci = cv[i]
        expo = pt * log(ti) + ptc * log(ci)
        if ez != 0.0:
            expo = expo + ez * ti
        if sigma != 0.0:
            expo = expo - sigma * log1p(-zs * ti)
        if kind == 0:
            ov[i] = exp(expo)
        elif kind == 1:
            ov[i] = exp(expo - p / (ti * ci))
        elif kind == 2:
            ov[i] = exp(expo - p / ti - q / ci)
        else:
            arg = p / (ti * ci)
            expo = expo - arg
            if expo > -746.0:
                ov[i] = exp(expo) * _kv_scaled_one(order, arg, &work)
            else:
                ov[i] = 0.0
    return out
