"""Backend parity and selection for the integrand kernels."""
import os
import subprocess
import sys

import numpy as np
import pytest

from diracrates import _kernels


class TestBackendParity:
    @pytest.mark.skipif(
        _kernels.bracket_integrand_numba is None, reason="numba backend inactive"
    )
    @pytest.mark.parametrize("antisymmetric", [False, True])
    def test_numba_matches_numpy(self, antisymmetric):
        rng = np.random.default_rng(0)
        dtau = np.sort(rng.uniform(0.0, 12.0, size=500))
        for a, eps, omega in [(1.0, 0.01, 1.0), (0.3, 0.02, -2.0), (5.0, 0.04, 0.7)]:
            ref = _kernels.bracket_integrand_numpy(dtau, a, eps, omega, antisymmetric)
            got = _kernels.bracket_integrand_numba(dtau, a, eps, omega, antisymmetric)
            np.testing.assert_allclose(got, ref, rtol=1e-13)


class TestBackendSelection:
    def test_env_flag_forces_numpy(self):
        env = dict(os.environ, DIRACRATES_NO_NUMBA="1", PYTHONPATH="src")
        proc = subprocess.run(
            [sys.executable, "-c",
             "from diracrates import _kernels; print(_kernels.BACKEND)"],
            capture_output=True, text=True, env=env,
        )
        assert proc.stdout.strip() == "numpy"

    def test_active_backend_is_labelled(self):
        assert _kernels.BACKEND in ("numba", "numpy")
        if _kernels.BACKEND == "numba":
            assert _kernels.bracket_integrand is _kernels.bracket_integrand_numba
        else:
            assert _kernels.bracket_integrand is _kernels.bracket_integrand_numpy
