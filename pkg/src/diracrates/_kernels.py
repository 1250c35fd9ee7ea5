"""Hot integrand kernels for the quadrature oracle.

The bracket integrands built from sinh^-6 branches dominate the
oracle's runtime.  They are compiled with numba when available; set
DIRACRATES_NO_NUMBA=1 to force the pure-numpy path.  Both paths are
importable directly (for the benchmark); `bracket_integrand` is the
selected one.
"""
from __future__ import annotations

import os

import numpy as np


def _numba_disabled() -> bool:
    return os.environ.get("DIRACRATES_NO_NUMBA", "").strip().lower() in (
        "1",
        "true",
        "yes",
    )


def bracket_integrand_numpy(
    dtau: np.ndarray, a: float, eps: float, omega_bd: float, antisymmetric: bool
) -> np.ndarray:
    """Bracket times oscillatory factor on an array of proper-time intervals.

    Symmetric:      [sinh^-6(x-ie) + sinh^-6(x+ie)] (e^{iw t} + e^{-iw t})
    Antisymmetric:  [sinh^-6(x-ie) - sinh^-6(x+ie)] (e^{iw t} - e^{-iw t})
    with x = a dtau / 2.
    """
    x = 0.5 * a * dtau
    sm = np.sinh(x - 1j * eps) ** -6
    sp = np.sinh(x + 1j * eps) ** -6
    ph = np.exp(1j * omega_bd * dtau)
    if antisymmetric:
        return (sm - sp) * (ph - 1.0 / ph)
    return (sm + sp) * (ph + 1.0 / ph)


try:
    if _numba_disabled():
        raise ImportError
    import cmath

    from numba import njit

    @njit(cache=True)
    def bracket_integrand_numba(dtau, a, eps, omega_bd, antisymmetric):
        out = np.empty(dtau.shape[0], dtype=np.complex128)
        for i in range(dtau.shape[0]):
            x = 0.5 * a * dtau[i]
            sm = cmath.sinh(complex(x, -eps))
            sp = cmath.sinh(complex(x, eps))
            sm2 = sm * sm
            sp2 = sp * sp
            sm6 = 1.0 / (sm2 * sm2 * sm2)
            sp6 = 1.0 / (sp2 * sp2 * sp2)
            ph = cmath.exp(1j * omega_bd * dtau[i])
            if antisymmetric:
                out[i] = (sm6 - sp6) * (ph - 1.0 / ph)
            else:
                out[i] = (sm6 + sp6) * (ph + 1.0 / ph)
        return out

    bracket_integrand = bracket_integrand_numba
    BACKEND = "numba"
except ImportError:
    bracket_integrand_numba = None
    bracket_integrand = bracket_integrand_numpy
    BACKEND = "numpy"
