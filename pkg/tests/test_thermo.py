import math

import numpy as np
import pytest

from dynmod.amplitude import ModulationConfig, SystemSpec
from dynmod.special import LorentzianSpectrum, Statistics
from dynmod.tcl import ThermalBathSpec
from dynmod.thermo import (
    count_local_maxima,
    optimal_temperature,
    qfi_conventional,
    qfi_modulated,
    thermo_grid,
    thermo_sweep,
)

OMEGA0 = 31.0
NU = 30.0


def _bath(stats=Statistics.FERMIONIC, lam=5.0):
    return ThermalBathSpec(LorentzianSpectrum(1.0, lam, OMEGA0), 1.0, stats)


def _conventional_longdouble(omega0, temp):
    # extended-precision reference for the closed-form expression
    w = np.longdouble(omega0)
    t = np.longdouble(temp)
    return float(w**2 / (4 * t**4 * np.cosh(w / (2 * t)) ** 2))


class TestConventionalQfi:
    def test_matches_extended_precision(self):
        for omega0, temp in ((1.0, 0.242), (31.0, 7.5), (1.0, 10.0)):
            assert qfi_conventional(omega0, temp) == pytest.approx(
                _conventional_longdouble(omega0, temp), rel=1e-12)

    def test_high_temperature_decay(self):
        assert qfi_conventional(1.0, 1e6) < 1e-20

    def test_overflow_safe_at_low_temperature(self):
        val = qfi_conventional(1.0, 1e-4)
        assert val == 0.0 or val < 1e-300 or math.isfinite(val)
        assert math.isfinite(qfi_conventional(1e3, 1e-3))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            qfi_conventional(1.0, 0.0)
        with pytest.raises(ValueError):
            qfi_conventional(0.0, 1.0)


class TestOptimalTemperature:
    def test_known_location(self):
        assert abs(optimal_temperature(1.0) - 0.242) <= 0.0005

    def test_scaling(self):
        base = optimal_temperature(1.0)
        assert optimal_temperature(31.0) == pytest.approx(31.0 * base, rel=1e-10)

    def test_agrees_with_grid_argmax(self):
        temps = np.linspace(0.1, 0.5, 4001)
        vals = [qfi_conventional(1.0, t) for t in temps]
        t_grid = temps[int(np.argmax(vals))]
        assert abs(optimal_temperature(1.0) - t_grid) <= temps[1] - temps[0]


class TestModulatedQfi:
    def test_unmodulated_reduces_to_conventional(self):
        sysp = SystemSpec(OMEGA0)
        mod = ModulationConfig(0.0, NU)
        for temp in (0.3, 2.0, 7.5):
            res = qfi_modulated(_bath(), sysp, mod, temp)
            assert res.qfi == pytest.approx(res.qfi_conventional, rel=1e-9)

    def test_all_outputs_nonnegative(self):
        sysp = SystemSpec(OMEGA0)
        mod = ModulationConfig(1.0, NU)
        for temp in (1e-3, 0.242, 7.5, 1e3):
            for stats in (Statistics.FERMIONIC, Statistics.BOSONIC):
                res = qfi_modulated(_bath(stats), sysp, mod, temp)
                for val in (res.qfi, res.qfi_low, res.qfi_high, res.qfi_conventional):
                    assert math.isfinite(val) and val >= 0.0

    def test_degenerate_low_temperature_flag(self):
        res = qfi_modulated(_bath(), SystemSpec(OMEGA0), ModulationConfig(0.0, NU), 1e-4)
        assert res.degenerate and res.qfi == 0.0

    def test_double_peak_fermionic(self):
        temps = np.geomspace(0.05, 50.0, 400)
        out = thermo_sweep(temps, _bath(), SystemSpec(OMEGA0), ModulationConfig(1.0, NU))
        peaks = count_local_maxima([r.qfi for r in out])
        assert len(peaks) == 2
        t_lo, t_hi = temps[peaks[0]], temps[peaks[1]]
        assert abs(t_lo - 0.242) <= 0.25 * 0.242
        assert abs(t_hi - 0.242 * OMEGA0) <= 0.25 * 0.242 * OMEGA0

    def test_double_peak_bosonic(self):
        temps = np.geomspace(0.05, 50.0, 300)
        out = thermo_sweep(temps, _bath(Statistics.BOSONIC), SystemSpec(OMEGA0),
                           ModulationConfig(1.0, NU))
        assert len(count_local_maxima([r.qfi for r in out])) == 2

    def test_low_region_approximation(self):
        """Near and below the low-frequency peak the single-sideband form dominates."""
        sysp = SystemSpec(OMEGA0)
        mod = ModulationConfig(1.0, NU)
        for temp in (0.1, 0.2, 0.242, 0.3):
            res = qfi_modulated(_bath(), sysp, mod, temp)
            assert res.qfi_low == pytest.approx(res.qfi, rel=0.1)

    def test_high_region_approximation(self):
        sysp = SystemSpec(OMEGA0)
        mod = ModulationConfig(1.0, NU)
        for temp in (15.0, 25.0, 50.0):
            res = qfi_modulated(_bath(), sysp, mod, temp)
            assert res.qfi_high == pytest.approx(res.qfi, rel=0.1)

    def test_temperature_domain(self):
        with pytest.raises(ValueError):
            qfi_modulated(_bath(), SystemSpec(OMEGA0), ModulationConfig(1.0, NU), 0.0)


class TestSweepsAndGrid:
    def test_sweep_rejects_bad_grid(self):
        with pytest.raises(ValueError):
            thermo_sweep([], _bath(), SystemSpec(OMEGA0), ModulationConfig(1.0, NU))
        with pytest.raises(ValueError):
            thermo_sweep([1.0, -1.0], _bath(), SystemSpec(OMEGA0), ModulationConfig(1.0, NU))

    def test_grid_rows_and_ridges(self):
        temps = np.geomspace(0.1, 20.0, 10)
        nus = [25.0, 30.0]
        rows, ridges = thermo_grid(temps, nus, _bath(), SystemSpec(OMEGA0),
                                   ModulationConfig(1.0, NU))
        assert len(rows) == 20
        assert [r[0] for r in ridges] == nus
        # low ridge follows the lowest sideband frequency
        x = OMEGA0 / (2.0 * optimal_temperature(OMEGA0))
        assert ridges[0][1] == pytest.approx((OMEGA0 - 25.0) / (2.0 * x))
        assert ridges[1][2] == pytest.approx(optimal_temperature(OMEGA0))


class TestCountLocalMaxima:
    def test_simple_cases(self):
        assert count_local_maxima([0, 1, 0]) == [1]
        assert count_local_maxima([0, 1, 1, 0]) == []
        assert count_local_maxima([0, 1, 0, 2, 0]) == [1, 3]
        assert count_local_maxima([1, 0]) == []
