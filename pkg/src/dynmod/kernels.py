"""Backend selection for the hot numerical kernels.

The numba-jitted kernels are used by default.  Set ``DYNMOD_DISABLE_NUMBA=1``
to force the pure-numpy fallback (or it is selected automatically when numba
cannot be imported).
"""

import os

_flag = os.environ.get("DYNMOD_DISABLE_NUMBA", "").strip().lower()
NUMBA_DISABLED = _flag in ("1", "true", "yes", "on")

if NUMBA_DISABLED:
    from . import _kernels_numpy as _impl
    USING_NUMBA = False
else:
    try:
        from . import _kernels_numba as _impl
        USING_NUMBA = True
    except ImportError:
        from . import _kernels_numpy as _impl
        USING_NUMBA = False

rk4_amplitude = _impl.rk4_amplitude
rk4_sensitivity = _impl.rk4_sensitivity
volterra_direct = _impl.volterra_direct
kernel_quadrature = _impl.kernel_quadrature
history_coeffs = _impl.history_coeffs
