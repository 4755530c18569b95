"""Backend selection: compiled extension when available, numpy otherwise.

``EXWHIT_PURE=1`` in the environment forces the numpy backend.  The chosen
module is re-exported here; both backends implement the same three entry
points (``kv_scaled``, ``kv_scaled_array``, ``beta_kernel_values``) plus the
kernel-kind constants, and agree to floating-point roundoff.
"""

import os

from . import pure

if os.environ.get("EXWHIT_PURE") == "1":
    _impl = pure
else:
    try:
        from . import _fast as _impl
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
KERNEL_NONE = _impl.KERNEL_NONE
KERNEL_EXP_P = _impl.KERNEL_EXP_P
KERNEL_EXP_PQ = _impl.KERNEL_EXP_PQ
KERNEL_BESSEL = _impl.KERNEL_BESSEL

kv_scaled = _impl.kv_scaled
kv_scaled_array = _impl.kv_scaled_array
beta_kernel_values = _impl.beta_kernel_values
