"""Two-level reduced-state utilities: Bloch representation, qubit Fisher
information, and Uhlmann fidelity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-9
PURE_THRESHOLD = 1.0 - 1e-9


@dataclass(frozen=True)
class QubitState:
    """Qubit density matrix as a real Bloch vector, |r| <= 1."""

    r: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        if r.shape != (3,):
            raise ValueError("Bloch vector must have three components")
        if np.linalg.norm(r) > 1.0 + NORM_TOL:
            raise ValueError("Bloch vector modulus exceeds 1")
        object.__setattr__(self, "r", r)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.r))


def bloch_qfi(state: QubitState, dr: np.ndarray) -> float:
    """Fisher information of a qubit from its Bloch vector and its parameter derivative."""
    dr = np.asarray(dr, dtype=float)
    r = state.r
    rn = state.norm
    base = float(np.dot(dr, dr))
    if rn >= PURE_THRESHOLD:
        return base
    rdot = float(np.dot(r, dr))
    return base + rdot * rdot / (1.0 - rn * rn)


def fidelity(a: QubitState, b: QubitState) -> float:
    """Uhlmann fidelity Tr sqrt(sqrt(rho_a) rho_b sqrt(rho_a)) in 2x2 closed form."""
    ra, rb = a.r, b.r
    tr_prod = 0.5 * (1.0 + float(np.dot(ra, rb)))
    det_a = max(0.25 * (1.0 - float(np.dot(ra, ra))), 0.0)
    det_b = max(0.25 * (1.0 - float(np.dot(rb, rb))), 0.0)
    val = tr_prod + 2.0 * math.sqrt(det_a * det_b)
    return min(math.sqrt(max(val, 0.0)), 1.0)


def reduced_state_from_amplitudes(c_e: complex, c_g: complex, phase: float = 0.0) -> QubitState:
    """Reduced qubit state after tracing out the single-excitation bath branch.

    Populations (|c_e|^2, 1 - |c_e|^2); coherence c_e c_g* carrying the free
    phase e^{-i phase}.  The bath branch only feeds the ground population.
    """
    pe = abs(c_e) ** 2
    if pe + abs(c_g) ** 2 > 1.0 + NORM_TOL:
        raise ValueError("amplitude norm exceeds 1")
    rho_eg = c_e * np.conj(c_g) * np.exp(-1j * phase)
    r = np.array([2.0 * rho_eg.real, -2.0 * rho_eg.imag, 2.0 * pe - 1.0])
    return QubitState(r=r)
