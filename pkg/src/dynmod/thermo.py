"""Thermometer Fisher information: the conventional single-frequency probe,
the modulated multi-sideband probe, and the low/high-temperature regional
approximations, for fermionic and bosonic baths."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitude import ModulationConfig, SystemSpec
from .special import Statistics
from .tcl import ThermalBathSpec, regional_populations, steady_state_population

DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ThermoQfiResult:
    temperature: float
    qfi: float
    qfi_low: float
    qfi_high: float
    qfi_conventional: float
    p_e: float
    p_low: float
    p_high: float
    degenerate: bool = False


def _sech2(x: np.ndarray) -> np.ndarray:
    """sech^2, evaluated in the log domain to survive large arguments."""
    ax = np.abs(np.asarray(x, dtype=float))
    return np.exp(math.log(4.0) - 2.0 * (ax + np.log1p(np.exp(-2.0 * ax))))


def _csch2(x: np.ndarray) -> np.ndarray:
    """csch^2 for x > 0, log-domain on the large-argument tail."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < 300.0
    out[small] = 1.0 / np.sinh(x[small]) ** 2
    out[~small] = np.exp(math.log(4.0) - 2.0 * x[~small])
    return out


def qfi_conventional(omega0: float, temperature: float) -> float:
    """Steady-state temperature QFI of an unmodulated two-level probe."""
    if temperature <= 0.0:
        raise ValueError("temperature must be positive")
    if omega0 <= 0.0:
        raise ValueError("omega0 must be positive")
    x = omega0 / (2.0 * temperature)
    return float(
        omega0**2 / (4.0 * temperature**4) * _sech2(np.asarray(x))
    )


def optimal_temperature(omega0: float) -> float:
    """Temperature maximizing the conventional QFI: x tanh x = 2 with x = omega0/2T."""
    if omega0 <= 0.0:
        raise ValueError("omega0 must be positive")
    lo, hi = 1.0, 4.0
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        if mid * math.tanh(mid) < 2.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    return omega0 / (2.0 * x)


def qfi_modulated(
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
    temperature: float | None = None,
    n_max: int | None = None,
) -> ThermoQfiResult:
    """Steady-state temperature QFI of the modulated probe with its regional limits."""
    if temperature is not None:
        bath = ThermalBathSpec(bath.spectrum, temperature, bath.statistics)
    t = bath.temperature
    if t <= 0.0:
        raise ValueError("temperature must be positive")

    ss = steady_state_population(bath, sys, mod, n_max)
    reg = regional_populations(bath, sys, mod)
    omega_n = sys.omega0 + ss.indices * mod.nu
    x = omega_n / (2.0 * t)

    p_e = ss.p_e
    if bath.statistics is Statistics.FERMIONIC:
        denom = p_e * (1.0 - p_e)
        numer = 0.25 * float(np.dot(ss.weights, omega_n * _sech2(x)))
        qfi_low = ss.weight_of(reg.n1) * qfi_conventional(reg.omega_n1, t)
        qfi_high = qfi_conventional(reg.omega_n0, t)
    else:
        denom = p_e * (1.0 + p_e) * (1.0 + 2.0 * p_e) ** 2
        numer = 0.25 * float(np.dot(ss.weights, omega_n * _csch2(x)))
        w_n1 = ss.weight_of(reg.n1)
        qfi_low = w_n1 * reg.omega_n1**2 / (4.0 * t**4) * float(
            _csch2(np.asarray(reg.omega_n1 / (2.0 * t)))
        )
        qfi_high = qfi_conventional(reg.omega_n0, t)

    degenerate = denom < DEGENERATE_TOL
    qfi = 0.0 if degenerate else numer * numer / (t**4 * denom)
    return ThermoQfiResult(
        temperature=t,
        qfi=qfi,
        qfi_low=qfi_low,
        qfi_high=qfi_high,
        qfi_conventional=qfi_conventional(sys.omega0, t),
        p_e=p_e,
        p_low=reg.p_low,
        p_high=reg.p_high,
        degenerate=degenerate,
    )


def thermo_sweep(
    temperatures,
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
    n_max: int | None = None,
) -> list[ThermoQfiResult]:
    """Temperature sweep in grid order."""
    temps = [float(t) for t in temperatures]
    if not temps or any(t <= 0.0 for t in temps):
        raise ValueError("temperature grid must be nonempty and positive")
    return [qfi_modulated(bath, sys, mod, t, n_max) for t in temps]


def thermo_grid(
    temperatures,
    nu_values,
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
    n_max: int | None = None,
):
    """(nu, T) grid of results plus the two analytic peak-ridge temperatures.

    Returns (rows, ridges): rows are (nu, T, ThermoQfiResult) in grid order;
    ridges are (nu, T_low_peak, T_high_peak) from the regional frequencies.
    """
    rows = []
    ridges = []
    xopt = sys.omega0 / (2.0 * optimal_temperature(sys.omega0))
    for nu in nu_values:
        m = ModulationConfig(mod.xi, float(nu))
        reg = regional_populations(bath, sys, m)
        ridges.append((
            float(nu),
            reg.omega_n1 / (2.0 * xopt),
            reg.omega_n0 / (2.0 * xopt),
        ))
        for t in temperatures:
            rows.append((float(nu), float(t), qfi_modulated(bath, sys, m, float(t), n_max)))
    return rows, ridges


def count_local_maxima(values) -> list[int]:
    """Indices of strict interior local maxima (3-point comparison)."""
    v = np.asarray(values, dtype=float)
    return [
        i for i in range(1, v.size - 1)
        if v[i] > v[i - 1] and v[i] > v[i + 1]
    ]
