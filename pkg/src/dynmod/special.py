"""Scalar special functions: integer-order Bessel J_n, thermal occupations,
and the Lorentzian spectral density."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

MAX_BESSEL_ORDER = 200


class Statistics(Enum):
    """Particle statistics of the bath."""

    FERMIONIC = "fermionic"
    BOSONIC = "bosonic"


@dataclass(frozen=True)
class LorentzianSpectrum:
    """Lorentzian bath spectrum J(w) = coupling^2*width / (2 pi [(w-center)^2 + (width/2)^2]).

    ``coupling`` is the reference frequency scale; everything else in the
    package is expressed in units of it.
    """

    coupling: float
    width: float
    center: float

    def __post_init__(self):
        if self.coupling <= 0.0:
            raise ValueError("coupling must be positive")
        if self.width <= 0.0:
            raise ValueError("width must be positive")
        if self.center <= 0.0:
            raise ValueError("center must be positive")

    @property
    def peak_value(self) -> float:
        return 2.0 * self.coupling**2 / (math.pi * self.width)


def _bessel_j_series(n: int, x: float) -> float:
    # ascending power series, adequate for |x| <~ 12 at 1e-10 absolute accuracy
    half = 0.5 * x
    term = 1.0
    for k in range(1, n + 1):
        term *= half / k
    total = term
    k = 1
    while True:
        term *= -(half * half) / (k * (n + k))
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-30) or k > 400:
            break
        k += 1
    return total


def _bessel_j_miller(n: int, x: float) -> float:
    # downward recurrence from a padded order, normalized via J0 + 2*sum J_{2k} = 1
    m_start = max(n, int(x)) + 40 + int(4.0 * math.sqrt(max(n, int(x)) + 1))
    if m_start % 2 == 1:
        m_start += 1
    jp = 0.0
    jc = 1e-300
    norm = 0.0
    result = 0.0
    for m in range(m_start, 0, -1):
        jm = (2.0 * m / x) * jc - jp
        jp = jc
        jc = jm
        if m - 1 == n:
            result = jc
        if (m - 1) % 2 == 0 and m - 1 > 0:
            norm += 2.0 * jc
        # rescale to avoid overflow of the unnormalized recurrence
        if abs(jc) > 1e250:
            jc *= 1e-250
            jp *= 1e-250
            norm *= 1e-250
            result *= 1e-250
    norm += jc  # J0 contribution
    if n == 0:
        result = jc
    return result / norm


def bessel_jn(n: int, x: float) -> float:
    """First-kind Bessel function J_n(x) for integer order, |n| <= 200."""
    n = int(n)
    if abs(n) > MAX_BESSEL_ORDER:
        raise ValueError(f"Bessel order |n| <= {MAX_BESSEL_ORDER} required, got {n}")
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    sign = 1.0
    if n < 0:
        n = -n
        if n % 2 == 1:
            sign = -sign
    if x < 0.0:
        x = -x
        if n % 2 == 1:
            sign = -sign
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x <= 12.0:
        return sign * _bessel_j_series(n, x)
    return sign * _bessel_j_miller(n, x)


def occupation(omega: float, temperature: float, statistics: Statistics) -> float:
    """Thermal mean occupation (e^{w/T} +/- 1)^{-1}; + fermionic, - bosonic."""
    if temperature < 0.0:
        raise ValueError("temperature must be nonnegative")
    if statistics is Statistics.BOSONIC and omega <= 0.0:
        raise ValueError("bosonic occupation requires omega > 0")
    if temperature == 0.0:
        if statistics is Statistics.FERMIONIC and omega < 0.0:
            return 1.0
        if statistics is Statistics.FERMIONIC and omega == 0.0:
            return 0.5
        return 0.0
    x = omega / temperature
    if statistics is Statistics.FERMIONIC:
        # (1 - tanh(x/2))/2 is overflow-safe on both tails
        return 0.5 * (1.0 - math.tanh(0.5 * x))
    if x > 700.0:
        return 0.0
    return 1.0 / math.expm1(x)


def spectral_density(omega: float, spec: LorentzianSpectrum) -> float:
    """Lorentzian spectral density J(omega), strictly positive on the real line."""
    d = omega - spec.center
    return spec.coupling**2 * spec.width / (2.0 * math.pi * (d * d + 0.25 * spec.width**2))


def spectral_density_array(omega: np.ndarray, spec: LorentzianSpectrum) -> np.ndarray:
    d = np.asarray(omega, dtype=float) - spec.center
    return spec.coupling**2 * spec.width / (2.0 * np.pi * (d * d + 0.25 * spec.width**2))
