"""Kernel backend selection.

The hot inner loops (truncated Cauchy products, the Frobenius substitution,
cyclotomic convolution) run over Python big ints either through the
compiled Cython extension or the pure-Python twin.  The compiled backend is
preferred when importable; set LOGP_PURE=1 to force the pure one.
"""

import os

from . import _kernels_py

if os.environ.get("LOGP_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

mul_trunc = _impl.mul_trunc
phi_subst = _impl.phi_subst
axpy = _impl.axpy
cyc_mul = _impl.cyc_mul
cyc_horner = _impl.cyc_horner


def omega_coeffs(p: int) -> list:
    """Coefficients [C(p,1), C(p,2), ..., C(p,p)] of (1+X)^p - 1."""
    out = []
    c = 1
    for k in range(1, p + 1):
        c = c * (p - k + 1) // k
        out.append(c)
    return out
