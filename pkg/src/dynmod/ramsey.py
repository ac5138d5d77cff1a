"""Ramsey-spectroscopy Fisher information for the modulated qubit.

The full expression needs the amplitude ratio R = c_e(T_f)/c_e(0) and its
frequency derivative; the high-frequency approximation keeps only T_f^2 |R|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitude import (
    ModulationConfig,
    SystemSpec,
    max_step,
    solve_sensitivity,
)
from .special import LorentzianSpectrum

RATIO_TOL = 1e-9


@dataclass(frozen=True)
class RamseyResult:
    t_f: float
    ratio: complex            # R = c_e(T_f) / c_e(0)
    dratio: complex           # dR / d(omega0)
    qfi_full: float
    qfi_approx: float         # T_f^2 |R|^2


def ramsey_qfi_full(ratio: complex, dratio: complex, t_f: float) -> float:
    """Fisher information for the qubit frequency after a free evolution of t_f."""
    absr = abs(ratio)
    if absr > 1.0 + RATIO_TOL:
        raise ValueError("ratio modulus exceeds 1")
    if absr < RATIO_TOL:
        return 0.0
    if absr >= 1.0 - RATIO_TOL:
        return t_f * t_f
    dabsr = (ratio.conjugate() * dratio).real / absr
    return (
        t_f * t_f * absr * absr
        + dabsr * dabsr / (1.0 - absr * absr)
        + abs(dratio) ** 2
        + 2.0 * t_f * (ratio * dratio.conjugate()).imag
    )


def ramsey_point(
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    t_f: float,
    h: float | None = None,
    c_e0: complex = -1j / math.sqrt(2.0),
) -> RamseyResult:
    """Evaluates the full and approximate Ramsey QFI at one parameter point."""
    if h is None:
        h = max_step(bath, mod) / 2.0
    traj = solve_sensitivity(sys, bath, mod, c_e0, t_f, h)
    ratio = complex(traj.c_e[-1] / traj.c_e0)
    dratio = complex(traj.dc_e[-1] / traj.c_e0)
    absr = abs(ratio)
    return RamseyResult(
        t_f=t_f,
        ratio=ratio,
        dratio=dratio,
        qfi_full=ramsey_qfi_full(ratio, dratio, t_f),
        qfi_approx=t_f * t_f * absr * absr,
    )


def ramsey_sweep(
    axis: str,
    values,
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    mod: ModulationConfig,
    t_f: float,
    h: float | None = None,
):
    """Sweeps the modulation frequency ('nu') or amplitude ('xi').

    Returns a list of (axis value, RamseyResult) in the given grid order.
    """
    if axis not in ("nu", "xi"):
        raise ValueError("axis must be 'nu' or 'xi'")
    values = list(values)
    if not values:
        raise ValueError("sweep grid must be nonempty")
    out = []
    for v in values:
        try:
            if axis == "nu":
                m = ModulationConfig(mod.xi, float(v))
            else:
                m = ModulationConfig(float(v), mod.nu)
            out.append((float(v), ramsey_point(sys, bath, m, t_f, h)))
        except ValueError as exc:
            raise ValueError(f"{axis}={v}: {exc}") from exc
    return out


def ramsey_grid(
    nu_values,
    xi_values,
    sys: SystemSpec,
    bath: LorentzianSpectrum,
    t_f: float,
    h: float | None = None,
):
    """(nu, xi) grid of Ramsey results, rows over nu then xi (deterministic order)."""
    out = []
    for nu in nu_values:
        for xi in xi_values:
            m = ModulationConfig(float(xi), float(nu))
            out.append((float(nu), float(xi), ramsey_point(sys, bath, m, t_f, h)))
    return out
