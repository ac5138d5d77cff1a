"""Zero-temperature single-excitation dynamics of the modulated qubit.

Contains the exact local-ODE solver (memory variable closes the Lorentzian
kernel), a direct quadratic-cost history solver used as an independent oracle,
the high-frequency closed-form amplitude and its frequency derivative, and the
co-integrated frequency sensitivity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .special import LorentzianSpectrum, bessel_jn

THETA_LIMIT = 1e-8  # |Theta * t| below which the critically damped series is used


@dataclass(frozen=True)
class ModulationConfig:
    """Periodic frequency drive: amplitude ``xi`` (dimensionless), frequency ``nu``."""

    xi: float
    nu: float

    def __post_init__(self):
        if self.nu <= 0.0:
            raise ValueError("modulation frequency must be positive")
        if self.xi < 0.0:
            raise ValueError("modulation amplitude must be nonnegative")


@dataclass(frozen=True)
class SystemSpec:
    """Two-level system with splitting ``omega0``."""

    omega0: float

    def __post_init__(self):
        if self.omega0 <= 0.0:
            raise ValueError("omega0 must be positive")

    def detuning(self, bath: LorentzianSpectrum) -> float:
        return self.omega0 - bath.center


@dataclass(frozen=True)
class EffectiveIndex:
    """Sideband index minimizing the shifted detuning |delta_c + n*nu|."""

    n0: int
    delta: float


@dataclass
class AmplitudeTrajectory:
    t: np.ndarray
    c_e: np.ndarray
    b_aux: np.ndarray
    c_e0: complex
    c_g0: complex
    dc_e: np.ndarray | None = None  # d c_e / d omega0, when co-integrated

    def excited_population(self) -> np.ndarray:
        return np.abs(self.c_e) ** 2


def select_effective_index(delta_c: float, nu: float) -> EffectiveIndex:
    """Integer n minimizing |delta_c + n nu|; ties go to smaller |n|, then negative n."""
    if nu <= 0.0:
        raise ValueError("nu must be positive")
    base = -delta_c / nu
    candidates = {math.floor(base), math.ceil(base), round(base)}
    best = min(
        (abs(delta_c + n * nu), abs(n), n) for n in candidates
    )
    n0 = best[2]
    return EffectiveIndex(n0=int(n0), delta=delta_c + n0 * nu)


def max_step(bath: LorentzianSpectrum, mod: ModulationConfig) -> float:
    """Largest admissible step: resolves the drive, the coupling, and the kernel decay."""
    return min(
        2.0 * math.pi / (20.0 * mod.nu),
        1.0 / (20.0 * bath.coupling),
        2.0 / (20.0 * bath.width),
    )


def _check_step(h: float, bath: LorentzianSpectrum, mod: ModulationConfig) -> None:
    if h <= 0.0:
        raise ValueError("step size must be positive")
    hmax = max_step(bath, mod)
    if h > hmax * (1.0 + 1e-12):
        raise ValueError(f"step size {h} exceeds the admissible maximum {hmax}")


def _n_steps(t_max: float, h: float) -> int:
    if t_max < 0.0:
        raise ValueError("t_max must be nonnegative")
    return int(round(t_max / h)) if t_max > 0.0 else 0


def solve_amplitude_exact(
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    c_e0: complex,
    t_max: float,
    h: float,
    c_g0: complex = 0.0,
) -> AmplitudeTrajectory:
    """RK4 integration of the exact local reformulation of the memory dynamics."""
    _check_step(h, bath, mod)
    n = _n_steps(t_max, h)
    c, b = kernels.rk4_amplitude(
        bath.coupling**2, sys.detuning(bath), bath.width, mod.xi, mod.nu,
        complex(c_e0), n, h,
    )
    return AmplitudeTrajectory(
        t=np.arange(n + 1) * h, c_e=c, b_aux=b, c_e0=complex(c_e0), c_g0=complex(c_g0)
    )


def solve_volterra_direct(
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    c_e0: complex,
    t_max: float,
    h: float,
    c_g0: complex = 0.0,
) -> AmplitudeTrajectory:
    """Trapezoidal history discretization with a predictor-corrector step.

    Independent oracle for ``solve_amplitude_exact``; cost is quadratic in the
    number of steps, so keep the horizon short.
    """
    _check_step(h, bath, mod)
    n = _n_steps(t_max, h)
    c = kernels.volterra_direct(
        bath.coupling**2, sys.detuning(bath), bath.width, mod.xi, mod.nu,
        complex(c_e0), n, h,
    )
    return AmplitudeTrajectory(
        t=np.arange(n + 1) * h, c_e=c, b_aux=np.zeros(n + 1, dtype=complex),
        c_e0=complex(c_e0), c_g0=complex(c_g0),
    )


def solve_sensitivity(
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    c_e0: complex,
    t_max: float,
    h: float,
    c_g0: complex = 0.0,
) -> AmplitudeTrajectory:
    """Co-integrates the amplitude and its exact derivative with respect to omega0."""
    _check_step(h, bath, mod)
    n = _n_steps(t_max, h)
    c, b, dc, _ = kernels.rk4_sensitivity(
        bath.coupling**2, sys.detuning(bath), bath.width, mod.xi, mod.nu,
        complex(c_e0), n, h,
    )
    return AmplitudeTrajectory(
        t=np.arange(n + 1) * h, c_e=c, b_aux=b, c_e0=complex(c_e0),
        c_g0=complex(c_g0), dc_e=dc,
    )


def _effective_theta(bath: LorentzianSpectrum, mod: ModulationConfig, idx: EffectiveIndex):
    a = 0.5 * bath.width - 1j * idx.delta
    jn = bessel_jn(idx.n0, mod.xi)
    theta = cmath.sqrt(a * a - 4.0 * bath.coupling**2 * jn * jn)
    return a, jn, theta


def amplitude_analytic(
    t: float,
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    c_e0: complex,
) -> complex:
    """High-frequency closed form for c_e(t) via the dominant sideband."""
    idx = select_effective_index(sys.detuning(bath), mod.nu)
    a, _, theta = _effective_theta(bath, mod, idx)
    z = 0.5 * theta * t
    envelope = cmath.exp(-0.5 * a * t)
    if abs(z) < THETA_LIMIT:
        # cosh -> 1, sinh(z)/z -> 1
        return c_e0 * envelope * (1.0 + 0.5 * a * t)
    return c_e0 * envelope * (cmath.cosh(z) + (a / theta) * cmath.sinh(z))


def amplitude_analytic_curve(t, sys, bath, mod, c_e0) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return np.array([amplitude_analytic(ti, sys, bath, mod, c_e0) for ti in t])


def derivative_analytic(
    t_f: float,
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
) -> complex:
    """Closed-form dR/d(omega0) of the amplitude ratio in the high-frequency regime."""
    idx = select_effective_index(sys.detuning(bath), mod.nu)
    a, jn, theta = _effective_theta(bath, mod, idx)
    if jn == 0.0:
        return 0.0 + 0.0j
    pref = 1j * 4.0 * bath.coupling**2 * jn * jn * cmath.exp(-0.5 * a * t_f)
    z = 0.5 * theta * t_f
    if abs(z) < 1e-4:
        # (sinh z - z cosh z)/theta^3 = (t_f/2)^3 * (-1/3 - z^2/30 + ...)
        factor = (0.5 * t_f) ** 3 * (-1.0 / 3.0 - z * z / 30.0)
        return pref * factor
    return pref * (cmath.sinh(z) - z * cmath.cosh(z)) / theta**3


def g_function(x, y):
    """g(x, y) = 1 - |Re sqrt((1 - i x)^2 - y^2)|; nonnegative for x, y >= 0."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = (1.0 - 1j * x) ** 2 - y.astype(complex) ** 2
    out = 1.0 - np.abs(np.real(np.sqrt(z)))
    if out.ndim == 0:
        return float(out)
    return out
