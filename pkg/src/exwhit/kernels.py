"""Scalar special-function kernels.

Gamma-family helpers wrap the C library routines exposed by :mod:`math`;
the modified Bessel function of the second kind is evaluated by the
backend in :mod:`exwhit._core` (Temme's series for small argument,
a Steed-type continued fraction for large argument, upward recurrence
in the order).  Confluent and Gauss hypergeometric series use
compensated accumulation with a geometric tail bound.

References
----------
Temme, N. M. (1975). On the numerical evaluation of the modified Bessel
function of the third kind. J. Comput. Phys. 19, 324-337.
Thompson, I. J. & Barnett, A. R. (1987). Modified Bessel functions of
complex order. Comput. Phys. Commun. 47, 245-257.
Olver, F. W. J. et al. (2010). NIST Handbook of Mathematical Functions,
chapters 5, 10, 13, 15.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _core
from .errors import DomainError

__all__ = [
    "EvalResult",
    "CompensatedSum",
    "rel_dev",
    "gamma",
    "log_gamma",
    "pochhammer",
    "beta",
    "bessel_k",
    "kummer_phi",
    "gauss_2f1",
]

_EPS = 2.220446049250313e-16
_TINY = 1e-300
_MAX_TERMS = 100000


@dataclass(frozen=True)
class EvalResult:
    """Value of a numerical evaluation together with quality metadata.

    Attributes
    ----------
    value : float
        The computed value.
    abs_error_estimate : float
        Absolute error estimate, always nonnegative.
    converged : bool
        Whether the internal tolerance was certified.  A converged
        result always carries a finite value.
    work : int
        Units of work spent: series terms plus quadrature nodes.
    """

    value: float
    abs_error_estimate: float
    converged: bool
    work: int

    def __post_init__(self):
        if self.abs_error_estimate < 0:
            raise ValueError("abs_error_estimate must be nonnegative")
        if self.converged and not math.isfinite(self.value):
            raise ValueError("a converged result must be finite")

    def scaled(self, factor: float) -> "EvalResult":
        """Return a copy with value and error scaled by ``factor``."""
        return EvalResult(
            self.value * factor,
            self.abs_error_estimate * abs(factor),
            self.converged and math.isfinite(self.value * factor),
            self.work,
        )


class CompensatedSum:
    """Kahan-Neumaier compensated accumulator.

    Neumaier, A. (1974). Rundungsfehleranalyse einiger Verfahren zur
    Summation endlicher Summen. ZAMM 54, 39-51.
    """

    __slots__ = ("_s", "_c")

    def __init__(self, value: float = 0.0):
        self._s = value
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def total(self) -> float:
        return self._s + self._c


def rel_dev(lhs: float, rhs: float) -> float:
    """Relative deviation |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)."""
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def gamma(x: float) -> float:
    """Gamma function for real ``x`` away from the poles.

    Raises
    ------
    DomainError
        If ``x`` is zero or a negative integer (pole).
    OverflowError
        If the result exceeds the double range (x > ~171.6).
    """
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"gamma pole at x={x!r}")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """Natural log of the gamma function, restricted to ``x > 0``."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n != int(n) or n < 0:
        raise DomainError(f"pochhammer requires integer n >= 0, got {n!r}")
    out = 1.0
    for k in range(int(n)):
        out *= x + k
    return out


def beta(a: float, b: float) -> float:
    """Euler beta function B(a, b) for ``a, b > 0``.

    Computed as exp(lgamma(a) + lgamma(b) - lgamma(a+b)); the symmetric
    form keeps B(a, b) == B(b, a) exactly.
    """
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"beta requires a, b > 0, got a={a!r}, b={b!r}")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def bessel_k(order: float, x: float) -> EvalResult:
    """Modified Bessel function of the second kind K_order(x).

    Half-integer orders use the closed form K_{1/2}(x) =
    sqrt(pi/(2x)) e^{-x} followed by the upward recurrence
    K_{v+1} = K_{v-1} + (2v/x) K_v, which is stable for K (DLMF 10.29.1).
    Other orders use Temme's series for x <= 2 and the Steed/
    Thompson-Barnett continued fraction for x > 2, both in the scaled
    form e^x K_v(x), so underflow only enters through the final exp(-x).

    Raises
    ------
    DomainError
        If ``x <= 0`` or ``order < 0``.
    OverflowError
        If the result exceeds the double range (tiny x, large order).
    """
    if not x > 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x!r}")
    if order < 0.0:
        raise DomainError(f"bessel_k requires order >= 0, got {order!r}")
    scaled, work = _core.kv_scaled(order, x)
    if not math.isfinite(scaled):
        raise OverflowError(
            f"bessel_k({order!r}, {x!r}) overflows the double range"
        )
    # exp(-x) underflows to 0 for x > ~745; the zero is the correctly
    # rounded value, so it is reported as converged.
    value = scaled * math.exp(-x)
    return EvalResult(value, 1e-13 * abs(value), True, work)


def _series_tail(
    acc: CompensatedSum,
    term: float,
    ratio: float,
    rel_tol: float,
) -> tuple[float, bool]:
    """Geometric tail bound |term| * ratio / (1 - ratio) when ratio < 1."""
    if ratio >= 1.0:
        return math.inf, False
    tail = abs(term) * ratio / (1.0 - ratio)
    return tail, tail <= rel_tol * max(abs(acc.total), _TINY)


def kummer_phi(
    b: float,
    c: float,
    z: float,
    rel_tol: float = 1e-14,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Confluent hypergeometric function Phi(b; c; z) = 1F1(b; c; z).

    Direct power series with compensated accumulation.  Negative ``z``
    is summed as the alternating series it is; no transformation is
    applied, so the evaluation is independent of the Kummer identity
    Phi(b; c; z) = e^z Phi(c-b; c; -z) and can be used to test it.
    Truncation is certified by the exact next-term ratio once it drops
    below one (DLMF 13.2.2).
    """
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"kummer_phi pole: c={c!r} is a nonpositive integer")
    acc = CompensatedSum(1.0)
    abs_sum = 1.0
    term = 1.0
    tail = math.inf
    converged = False
    n = 0
    while n < max_terms:
        term *= z * (b + n) / ((c + n) * (n + 1))
        n += 1
        if not math.isfinite(term):
            raise OverflowError(f"kummer_phi({b!r}, {c!r}, {z!r}) overflows")
        acc.add(term)
        abs_sum += abs(term)
        if n > abs(c) + 1:  # past any sign change in c + n
            ratio = abs(z) * abs(b + n) / (abs(c + n) * (n + 1))
            tail, ok = _series_tail(acc, term, ratio, rel_tol)
            if ok:
                converged = True
                break
    total = acc.total
    err = (0.0 if math.isinf(tail) else tail) + _EPS * abs_sum
    return EvalResult(total, err, converged, n + 1)


def gauss_2f1(
    a: float,
    b: float,
    c: float,
    z: float,
    rel_tol: float = 1e-14,
    max_terms: int = _MAX_TERMS,
) -> EvalResult:
    """Gauss hypergeometric function 2F1(a, b; c; z) for ``|z| < 1``.

    Direct series summation (DLMF 15.2.1); the tail is certified by the
    exact next-term ratio, which tends to |z| < 1.
    """
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"gauss_2f1 pole: c={c!r} is a nonpositive integer")
    if not abs(z) < 1.0:
        raise DomainError(f"gauss_2f1 requires |z| < 1, got z={z!r}")
    acc = CompensatedSum(1.0)
    abs_sum = 1.0
    term = 1.0
    tail = math.inf
    converged = False
    n = 0
    while n < max_terms:
        term *= z * (a + n) * (b + n) / ((c + n) * (n + 1))
        n += 1
        if not math.isfinite(term):
            raise OverflowError(f"gauss_2f1 overflows at term {n}")
        acc.add(term)
        abs_sum += abs(term)
        if n > abs(c) + 1:
            ratio = abs(z) * abs(a + n) * abs(b + n) / (abs(c + n) * (n + 1))
            tail, ok = _series_tail(acc, term, ratio, rel_tol)
            if ok:
                converged = True
                break
    total = acc.total
    err = (0.0 if math.isinf(tail) else tail) + _EPS * abs_sum
    return EvalResult(total, err, converged, n + 1)
