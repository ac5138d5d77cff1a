"""Open-system dynamics of a frequency-modulated qubit and the Fisher
information of frequency (Ramsey) and temperature (thermometer) estimation."""

from .amplitude import (
    AmplitudeTrajectory,
    EffectiveIndex,
    ModulationConfig,
    SystemSpec,
    amplitude_analytic,
    amplitude_analytic_curve,
    derivative_analytic,
    g_function,
    max_step,
    select_effective_index,
    solve_amplitude_exact,
    solve_sensitivity,
    solve_volterra_direct,
)
from .kernels import NUMBA_DISABLED, USING_NUMBA
from .qubit import QubitState, bloch_qfi, fidelity, reduced_state_from_amplitudes
from .ramsey import RamseyResult, ramsey_grid, ramsey_point, ramsey_qfi_full, ramsey_sweep
from .special import (
    LorentzianSpectrum,
    Statistics,
    bessel_jn,
    occupation,
    spectral_density,
)
from .tcl import (
    KernelTable,
    PopulationTrajectory,
    RegionalPopulations,
    SteadyStateResult,
    ThermalBathSpec,
    build_kernel_table,
    effective_frequency,
    regional_populations,
    steady_state_population,
    tcl_propagate,
)
from .thermo import (
    ThermoQfiResult,
    count_local_maxima,
    optimal_temperature,
    qfi_conventional,
    qfi_modulated,
    thermo_grid,
    thermo_sweep,
)

__version__ = "1.0.0"

__all__ = [
    "AmplitudeTrajectory",
    "EffectiveIndex",
    "KernelTable",
    "LorentzianSpectrum",
    "ModulationConfig",
    "NUMBA_DISABLED",
    "PopulationTrajectory",
    "QubitState",
    "RamseyResult",
    "RegionalPopulations",
    "Statistics",
    "SteadyStateResult",
    "SystemSpec",
    "ThermalBathSpec",
    "ThermoQfiResult",
    "USING_NUMBA",
    "amplitude_analytic",
    "amplitude_analytic_curve",
    "bessel_jn",
    "bloch_qfi",
    "build_kernel_table",
    "count_local_maxima",
    "derivative_analytic",
    "effective_frequency",
    "fidelity",
    "g_function",
    "max_step",
    "occupation",
    "optimal_temperature",
    "qfi_conventional",
    "qfi_modulated",
    "ramsey_grid",
    "ramsey_point",
    "ramsey_qfi_full",
    "ramsey_sweep",
    "reduced_state_from_amplitudes",
    "regional_populations",
    "select_effective_index",
    "solve_amplitude_exact",
    "solve_sensitivity",
    "solve_volterra_direct",
    "spectral_density",
    "steady_state_population",
    "tcl_propagate",
    "thermo_grid",
    "thermo_sweep",
]
