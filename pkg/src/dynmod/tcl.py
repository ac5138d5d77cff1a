"""Finite-temperature second-order time-convolutionless dynamics of the
modulated qubit, plus the steady-state superposition formulas.

The frequency integrals are precomputed once per bath as sampled kernels
K_w(s) = int dw J(w) w(w) e^{i(omega0 - w)s} on the propagation time grid;
the population/coherence equations then reduce to history sums over that
table (quadratic cost, sequential kernel reads).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .amplitude import (
    ModulationConfig,
    SystemSpec,
    max_step,
    select_effective_index,
)
from .special import (
    LorentzianSpectrum,
    Statistics,
    bessel_jn,
    occupation,
    spectral_density_array,
)

BOSONIC_FLOOR_FACTOR = 1e-6  # lower quadrature edge, in units of the coupling
MAX_WEIGHT_ORDER = 200


@dataclass(frozen=True)
class ThermalBathSpec:
    spectrum: LorentzianSpectrum
    temperature: float
    statistics: Statistics

    def __post_init__(self):
        if self.temperature < 0.0:
            raise ValueError("temperature must be nonnegative")


@dataclass
class KernelTable:
    s: np.ndarray
    h: float
    k_plain: np.ndarray          # weight 1
    k_occ: np.ndarray            # weight N
    k_sym: np.ndarray | None     # weight 2N+1 (bosonic propagation)
    omega_lo: float
    omega_hi: float
    omega_step: float
    tail_estimate: float         # spectral mass left outside the window

    @property
    def s_max(self) -> float:
        return float(self.s[-1])


@dataclass
class PopulationTrajectory:
    t: np.ndarray
    p_e: np.ndarray
    rho_eg: np.ndarray
    steady_estimate: float
    steady_reached: bool


@dataclass
class SteadyStateResult:
    p_e: float
    indices: np.ndarray
    weights: np.ndarray   # fermionic: P_n summing to 1; bosonic: tilde-P_n

    def weight_of(self, n: int) -> float:
        hit = np.nonzero(self.indices == n)[0]
        return float(self.weights[hit[0]]) if hit.size else 0.0


@dataclass
class RegionalPopulations:
    p_low: float
    p_high: float
    n1: int
    n0: int
    omega_n1: float
    omega_n0: float


def _occupation_array(omega: np.ndarray, temperature: float, statistics: Statistics) -> np.ndarray:
    if temperature == 0.0:
        return np.zeros_like(omega)
    x = omega / temperature
    if statistics is Statistics.FERMIONIC:
        return 0.5 * (1.0 - np.tanh(0.5 * x))
    return 1.0 / np.expm1(np.minimum(x, 700.0))


def build_kernel_table(
    bath: ThermalBathSpec,
    omega0: float,
    s_max: float,
    h: float,
    window_halfwidth: float | None = None,
    omega_step: float | None = None,
) -> KernelTable:
    """Trapezoidal frequency quadrature of the bath kernels on a uniform s grid.

    The window defaults to 50 spectral widths around the spectrum center,
    floored at 0 (fermionic) or just above 0 (bosonic); the frequency step
    must resolve both the Lorentzian and the longest oscillation e^{-i w s_max}.
    """
    spec = bath.spectrum
    lam = spec.width
    if s_max < 0.0 or h <= 0.0:
        raise ValueError("s_max must be nonnegative and h positive")
    if window_halfwidth is None:
        window_halfwidth = 50.0 * lam
    if window_halfwidth < 10.0 * lam:
        raise ValueError("quadrature window must span at least 10 spectral widths")
    step_bound = min(lam / 20.0, math.pi / (4.0 * s_max) if s_max > 0.0 else np.inf)
    if omega_step is None:
        omega_step = step_bound
    if omega_step > step_bound * (1.0 + 1e-12):
        raise ValueError(f"omega step {omega_step} exceeds the admissible {step_bound}")

    floor = 0.0 if bath.statistics is Statistics.FERMIONIC else BOSONIC_FLOOR_FACTOR * spec.coupling
    lo = max(floor, spec.center - window_halfwidth)
    hi = spec.center + window_halfwidth
    n_om = int(math.ceil((hi - lo) / omega_step)) + 1
    omega = np.linspace(lo, hi, n_om)
    dw = omega[1] - omega[0]
    if bath.statistics is Statistics.BOSONIC and lo <= 2.0 * dw and bath.temperature > 0.0:
        # the occupation diverges as T/omega near zero; a uniform grid starting
        # at the floor grossly overweights the first node, so resolve the
        # infrared end on a logarithmic subgrid instead
        n_log = max(int(math.ceil(math.log(dw / lo) / math.log(1.1))), 2)
        ir = np.geomspace(lo, dw, n_log)
        omega = np.concatenate((ir[:-1], np.linspace(dw, hi, n_om)))

    j = spectral_density_array(omega, spec)
    occ = _occupation_array(omega, bath.temperature, bath.statistics)
    trap = np.empty_like(omega)
    trap[1:-1] = 0.5 * (omega[2:] - omega[:-2])
    trap[0] = 0.5 * (omega[1] - omega[0])
    trap[-1] = 0.5 * (omega[-1] - omega[-2])

    rows = [j * trap, j * occ * trap]
    if bath.statistics is Statistics.BOSONIC:
        rows.append(j * (2.0 * occ + 1.0) * trap)
    fw = np.ascontiguousarray(np.array(rows))

    n_s = int(round(s_max / h)) if s_max > 0.0 else 0
    kq = kernels.kernel_quadrature(omega, fw, omega0, h, n_s)

    # mass of the Lorentzian outside the window (arctan tails)
    c, g = spec.center, 0.5 * spec.width
    full = spec.coupling**2
    inside = full / math.pi * (math.atan((hi - c) / g) - math.atan((lo - c) / g))
    return KernelTable(
        s=np.arange(n_s + 1) * h,
        h=h,
        k_plain=kq[0],
        k_occ=kq[1],
        k_sym=kq[2] if bath.statistics is Statistics.BOSONIC else None,
        omega_lo=lo,
        omega_hi=hi,
        omega_step=dw,
        tail_estimate=full - inside,
    )


def tcl_propagate(
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
    p_e0: float,
    rho_eg0: complex,
    table: KernelTable,
    t_max: float,
    h: float,
) -> PopulationTrajectory:
    """Propagates the excited population and coherence from the kernel table.

    Population: dP/dt = A(t) - B(t) P with history coefficients A, B; the
    coherence decays under the time-local complex rate from the same sums.
    """
    if not math.isclose(h, table.h, rel_tol=1e-12):
        raise ValueError("propagation step must match the kernel table grid")
    _validate_tcl_step(h, bath.spectrum, mod)
    n = int(round(t_max / h))
    if n > table.s.shape[0] - 1:
        raise ValueError("kernel table does not cover the requested horizon")
    t = np.arange(n + 1) * h
    u = np.exp(1j * mod.xi * np.sin(mod.nu * t))

    g_occ = kernels.history_coeffs(table.k_occ[: n + 1], u, h)
    if bath.statistics is Statistics.BOSONIC:
        g_damp = kernels.history_coeffs(table.k_sym[: n + 1], u, h)
    else:
        g_damp = kernels.history_coeffs(table.k_plain[: n + 1], u, h)
    a = 2.0 * g_occ.real
    b = 2.0 * g_damp.real

    p = np.empty(n + 1)
    p[0] = p_e0
    for j in range(n):
        f0 = a[j] - b[j] * p[j]
        pred = p[j] + h * f0
        f1 = a[j + 1] - b[j + 1] * pred
        p[j + 1] = p[j] + 0.5 * h * (f0 + f1)

    # cumulative trapezoid of the complex decoherence rate
    integ = np.concatenate(([0.0 + 0.0j], np.cumsum(0.5 * h * (g_damp[1:] + g_damp[:-1]))))
    rho = rho_eg0 * np.exp(-integ)

    # compare the mean of the last tenth with the tenth before it; a slope
    # criterion would be dominated by the residual micro-oscillation at nu
    tail = max(n // 10, 1)
    prior = np.mean(p[-2 * tail: -tail]) if n >= 2 * tail else p[0]
    steady_reached = bool(abs(np.mean(p[-tail:]) - prior) < 1e-4)
    return PopulationTrajectory(
        t=t,
        p_e=p,
        rho_eg=rho,
        steady_estimate=float(np.mean(p[-tail:])),
        steady_reached=steady_reached,
    )


def _validate_tcl_step(h: float, spec: LorentzianSpectrum, mod: ModulationConfig) -> None:
    hmax = max_step(spec, mod)
    if h > hmax * (1.0 + 1e-12):
        raise ValueError(f"step size {h} exceeds the admissible maximum {hmax}")


def _sideband_indices(omega0: float, nu: float, xi: float, n_max: int | None) -> np.ndarray:
    if n_max is None:
        n_max = int(math.ceil(xi)) + 20
    if n_max < int(math.ceil(xi)) + 20:
        raise ValueError("n_max must be at least ceil(xi) + 20")
    # always reach down to the lowest positive sideband
    n_lo = -max(n_max, int(math.floor(omega0 / nu)))
    ns = np.arange(n_lo, n_max + 1)
    return ns[omega0 + ns * nu > 0.0]


def _sideband_weights(bath: ThermalBathSpec, sys: SystemSpec, mod: ModulationConfig, ns: np.ndarray):
    omega_n = sys.omega0 + ns * mod.nu
    j = spectral_density_array(omega_n, bath.spectrum)
    bess = np.array([
        bessel_jn(int(n), mod.xi) ** 2 if abs(int(n)) <= MAX_WEIGHT_ORDER else 0.0
        for n in ns
    ])
    return omega_n, bess * j


def steady_state_population(
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
    n_max: int | None = None,
) -> SteadyStateResult:
    """Long-time excited population as a weighted mix of sideband equilibria."""
    ns = _sideband_indices(sys.omega0, mod.nu, mod.xi, n_max)
    if ns.size == 0:
        raise ValueError("no sideband frequency is positive")
    omega_n, w = _sideband_weights(bath, sys, mod, ns)
    occ = _occupation_array(omega_n, bath.temperature, bath.statistics)
    if bath.statistics is Statistics.FERMIONIC:
        weights = w / np.sum(w)
        p_e = float(np.dot(weights, occ))
    else:
        denom = np.sum(w * (1.0 + 2.0 * occ))
        weights = w / denom
        p_e = float(np.dot(weights, occ))
    return SteadyStateResult(p_e=p_e, indices=ns, weights=weights)


def regional_populations(
    bath: ThermalBathSpec,
    sys: SystemSpec,
    mod: ModulationConfig,
) -> RegionalPopulations:
    """Dominant-term approximations in the low- and high-temperature regions."""
    n1 = -int(math.floor(sys.omega0 / mod.nu))
    if sys.omega0 + n1 * mod.nu <= 0.0:
        n1 += 1
    idx = select_effective_index(sys.detuning(bath.spectrum), mod.nu)
    n0 = idx.n0
    omega_n1 = sys.omega0 + n1 * mod.nu
    omega_n0 = sys.omega0 + n0 * mod.nu
    ss = steady_state_population(bath, sys, mod)
    p_n1 = ss.weight_of(n1)
    occ_low = occupation(omega_n1, bath.temperature, bath.statistics)
    p_low = p_n1 * occ_low
    # high-T limit is the Fermi form for both statistics (bosonic: N/(1+2N))
    p_high = occupation(omega_n0, bath.temperature, Statistics.FERMIONIC)
    return RegionalPopulations(
        p_low=p_low, p_high=p_high, n1=n1, n0=n0,
        omega_n1=omega_n1, omega_n0=omega_n0,
    )


def effective_frequency(p_e: float, temperature: float) -> float:
    """Frequency of the unmodulated thermal qubit with the same population."""
    if not 0.0 < p_e < 1.0:
        raise ValueError("population must lie strictly between 0 and 1")
    if temperature <= 0.0:
        raise ValueError("temperature must be positive")
    return temperature * math.log(1.0 / p_e - 1.0)
