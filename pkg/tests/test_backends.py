"""The compiled kernels and the pure-numpy fallbacks must agree to rounding,
and the environment flag must actually select the fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

from dynmod import _kernels_numpy as knp

knb = pytest.importorskip("dynmod._kernels_numba")

ARGS = (1.0, 0.0, 5.0, 2.0, 100.0, complex(2**-0.5), 2000, 2.5e-3)


class TestBackendAgreement:
    def test_rk4_amplitude(self):
        c_np, b_np = knp.rk4_amplitude(*ARGS)
        c_nb, b_nb = knb.rk4_amplitude(*ARGS)
        assert np.max(np.abs(c_np - c_nb)) < 1e-13
        assert np.max(np.abs(b_np - b_nb)) < 1e-13

    def test_rk4_sensitivity(self):
        out_np = knp.rk4_sensitivity(*ARGS)
        out_nb = knb.rk4_sensitivity(*ARGS)
        for a, b in zip(out_np, out_nb):
            assert np.max(np.abs(a - b)) < 1e-12

    def test_volterra_direct(self):
        c_np = knp.volterra_direct(*ARGS)
        c_nb = knb.volterra_direct(*ARGS)
        assert np.max(np.abs(c_np - c_nb)) < 1e-13

    def test_kernel_quadrature(self):
        omega = np.linspace(0.0, 60.0, 5001)
        j = 5.0 / (2.0 * np.pi * ((omega - 31.0) ** 2 + 6.25))
        fw = np.ascontiguousarray(np.vstack((j, 0.5 * j)))
        k_np = knp.kernel_quadrature(omega, fw, 31.0, 0.01, 500)
        k_nb = knb.kernel_quadrature(omega, fw, 31.0, 0.01, 500)
        assert np.max(np.abs(k_np - k_nb)) < 1e-10

    def test_history_coeffs(self):
        s = np.arange(501) * 0.01
        kern = np.exp((-0.5 + 2.0j) * s)
        u = np.exp(1j * np.sin(30.0 * s))
        g_np = knp.history_coeffs(kern, u, 0.01)
        g_nb = knb.history_coeffs(kern, u, 0.01)
        assert np.max(np.abs(g_np - g_nb)) < 1e-12


class TestBackendSelection:
    def _probe(self, env_value):
        env = dict(os.environ)
        if env_value is None:
            env.pop("DYNMOD_DISABLE_NUMBA", None)
        else:
            env["DYNMOD_DISABLE_NUMBA"] = env_value
        out = subprocess.run(
            [sys.executable, "-c", "import dynmod; print(dynmod.USING_NUMBA)"],
            env=env, capture_output=True, text=True, check=True,
        )
        return out.stdout.strip()

    def test_flag_disables_compiled_backend(self):
        assert self._probe("1") == "False"

    def test_default_uses_compiled_backend(self):
        assert self._probe(None) == "True"

    def test_zero_means_enabled(self):
        assert self._probe("0") == "True"
