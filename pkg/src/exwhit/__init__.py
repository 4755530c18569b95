"""Extended Whittaker functions and their transform calculus.

The package evaluates the Bessel-kernel extension M_{p,v,lambda,rho}
of the Whittaker function of the first kind, the extended beta and
hypergeometric functions underneath it, and the Mellin, Laplace, and
derivative identities that connect them, with every identity available
through at least two independent numerical routes for verification.
"""

from ._core import BACKEND
from .errors import DomainError, IntegrandError, SamplerStarvationError
from .ext_beta import BetaExtParams, beta_p, beta_pq, beta_v
from .ext_hyp import (
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
from .kernels import (
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
from .quadrature import (
    QuadResult,
    QuadratureSpec,
    integrate_01,
    integrate_finite,
    integrate_semi_inf,
)
from .whittaker import (
    MellinQuery,
    WhittakerParams,
    bessel_moment,
    bessel_moment_numeric,
    laplace_closed_form,
    laplace_closed_form_2f1,
    laplace_numeric,
    m_classical,
    m_p,
    m_pq,
    m_pv,
    m_pv_alt,
    m_pv_derivative_formula,
    m_pv_integral,
    mellin_closed_form,
    mellin_closed_form_v0,
    mellin_numeric,
    transform_check,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "DomainError",
    "IntegrandError",
    "SamplerStarvationError",
    "BetaExtParams",
    "beta_p",
    "beta_pq",
    "beta_v",
    "coef_cache_clear",
    "f_p",
    "f_p_integral",
    "f_pq",
    "f_pq_integral",
    "f_pv_integral",
    "f_pv_series",
    "phi_p",
    "phi_p_integral",
    "phi_pq",
    "phi_pq_integral",
    "phi_pv_derivative",
    "phi_pv_integral",
    "phi_pv_series",
    "phi_pv_transform_check",
    "CompensatedSum",
    "EvalResult",
    "bessel_k",
    "beta",
    "gamma",
    "gauss_2f1",
    "kummer_phi",
    "log_gamma",
    "pochhammer",
    "rel_dev",
    "QuadResult",
    "QuadratureSpec",
    "integrate_01",
    "integrate_finite",
    "integrate_semi_inf",
    "MellinQuery",
    "WhittakerParams",
    "bessel_moment",
    "bessel_moment_numeric",
    "laplace_closed_form",
    "laplace_closed_form_2f1",
    "laplace_numeric",
    "m_classical",
    "m_p",
    "m_pq",
    "m_pv",
    "m_pv_alt",
    "m_pv_derivative_formula",
    "m_pv_integral",
    "mellin_closed_form",
    "mellin_closed_form_v0",
    "mellin_numeric",
    "transform_check",
]
