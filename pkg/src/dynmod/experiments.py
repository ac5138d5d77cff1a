"""Figure-reproduction experiments: deterministic CSV output per figure panel.

All frequencies and rates are in units of the bath coupling, time in units of
its inverse, temperature likewise (k_B = hbar = 1).  Identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .amplitude import (
    ModulationConfig,
    SystemSpec,
    amplitude_analytic_curve,
    derivative_analytic,
    g_function,
    max_step,
    solve_amplitude_exact,
    solve_sensitivity,
)
from .qubit import QubitState, fidelity, reduced_state_from_amplitudes
from .ramsey import ramsey_point
from .special import LorentzianSpectrum, Statistics
from .tcl import (
    ThermalBathSpec,
    build_kernel_table,
    steady_state_population,
    tcl_propagate,
)
from .thermo import qfi_modulated, thermo_grid, thermo_sweep

UNITS_COMMENT = "# frequencies/rates/temperatures in units of the coupling, time in its inverse"

SQ2 = 1.0 / math.sqrt(2.0)


def _fmt(x) -> str:
    return format(float(x), ".12g")


def write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(UNITS_COMMENT + "\n")
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def write_summary(path: str, entries: dict) -> None:
    with open(path, "w", newline="\n") as f:
        for key, val in entries.items():
            if isinstance(val, float):
                val = _fmt(val)
            f.write(f"{key} = {val}\n")


def _stride(n: int, target: int = 1000) -> int:
    return max(1, n // target)


def _xi_tag(xi: float) -> str:
    return format(float(xi), "g").replace(".", "")


def _spectrum(params) -> LorentzianSpectrum:
    return LorentzianSpectrum(1.0, params["lambda"], params["omega0"] - params["delta_c"])


def _parse_stats(value) -> Statistics:
    if isinstance(value, Statistics):
        return value
    try:
        return Statistics(str(value).lower())
    except ValueError as exc:
        raise ValueError(f"unknown statistics '{value}'") from exc


# --------------------------------------------------------------------------
# figure runners
# --------------------------------------------------------------------------

def run_fig1(params, outdir):
    sysp = SystemSpec(params["omega0"])
    mod_nu = params["nu"]
    files, summary = [], {}
    for panel, lam in (("a", params["lambda_a"]), ("b", params["lambda_b"])):
        bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
        cols = {"omega_t": None}
        series = {}
        for xi in params["xi_values"]:
            mod = ModulationConfig(xi, mod_nu)
            h = params["h"] or max_step(bath, mod) / 4.0
            tr = solve_amplitude_exact(sysp, bath, mod, SQ2, params["t_max"], h, c_g0=SQ2)
            k = _stride(tr.t.size)
            cols["omega_t"] = tr.t[::k]
            tag = _xi_tag(xi)
            series[f"pe_numeric_xi{tag}"] = np.abs(tr.c_e[::k]) ** 2
            if xi > 0.0:
                ana = amplitude_analytic_curve(tr.t[::k], sysp, bath, mod, SQ2)
                series[f"pe_analytic_xi{tag}"] = np.abs(ana) ** 2
                summary[f"fig1{panel}_maxdev_xi{tag}"] = float(
                    np.max(np.abs(series[f"pe_numeric_xi{tag}"] - np.abs(ana) ** 2))
                )
            summary[f"fig1{panel}_pe_final_xi{tag}"] = float(np.abs(tr.c_e[-1]) ** 2)
        header = ["omega_t"] + [k for k in series if k.startswith("pe_numeric")] + [
            k for k in series if k.startswith("pe_analytic")
        ]
        rows = zip(cols["omega_t"], *[series[k] for k in header[1:]])
        path = os.path.join(outdir, f"fig1{panel}.csv")
        write_csv(path, header, rows)
        files.append(path)
    return files, summary


def run_fig2(params, outdir):
    sysp = SystemSpec(params["omega0"])
    xi_grid = np.round(np.arange(params["xi_min"], params["xi_max"] + 1e-9, params["xi_step"]), 12)
    rows = []
    summary = {}
    state0 = reduced_state_from_amplitudes(SQ2, SQ2)
    for xi in xi_grid:
        row = [xi]
        for lam in (params["lambda_a"], params["lambda_b"]):
            bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
            mod = ModulationConfig(float(xi), params["nu"])
            h = params["h"] or max_step(bath, mod) / 4.0
            tr = solve_amplitude_exact(sysp, bath, mod, SQ2, params["t_max"], h, c_g0=SQ2)
            st = reduced_state_from_amplitudes(tr.c_e[-1], SQ2)
            row.append(fidelity(state0, st))
            ana = amplitude_analytic_curve([params["t_max"]], sysp, bath, mod, SQ2)[0]
            row.append(fidelity(state0, reduced_state_from_amplitudes(ana, SQ2)))
        rows.append(row)
    header = ["xi", "fid_numeric_lam_a", "fid_analytic_lam_a",
              "fid_numeric_lam_b", "fid_analytic_lam_b"]
    path = os.path.join(outdir, "fig2.csv")
    write_csv(path, header, rows)
    return [path], summary


def run_fig3(params, outdir):
    sysp = SystemSpec(params["omega0"])
    series, tgrid = {}, None
    summary = {}
    for nu in params["nu_values"]:
        for lam in (params["lambda_a"], params["lambda_b"]):
            bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
            mod = ModulationConfig(params["xi"], nu)
            h = params["h"] or max_step(bath, mod) / 4.0
            tr = solve_amplitude_exact(sysp, bath, mod, SQ2, params["t_max"], h, c_g0=SQ2)
            k = _stride(tr.t.size)
            tgrid = tr.t[::k]
            tag = f"nu{format(nu, 'g')}_lam{_xi_tag(lam)}"
            series[f"pe_numeric_{tag}"] = np.abs(tr.c_e[::k]) ** 2
            ana = amplitude_analytic_curve(tgrid, sysp, bath, mod, SQ2)
            series[f"pe_analytic_{tag}"] = np.abs(ana) ** 2
            summary[f"fig3_maxdev_{tag}"] = float(
                np.max(np.abs(series[f"pe_numeric_{tag}"] - np.abs(ana) ** 2))
            )
    header = ["omega_t"] + list(series)
    path = os.path.join(outdir, "fig3.csv")
    write_csv(path, header, zip(tgrid, *series.values()))
    return [path], summary


def _ramsey_axis_rows(axis_values, make_mod, sysp, bath, t_f, h):
    rows = []
    for v in axis_values:
        mod = make_mod(float(v))
        step = h or max_step(bath, mod) / 2.0
        res = ramsey_point(sysp, bath, mod, t_f, step)
        rows.append((v, res.qfi_full / t_f**2, res.qfi_approx / t_f**2, abs(res.ratio)))
    return rows


def run_fig4(params, outdir):
    sysp = SystemSpec(params["omega0"])
    t_f = params["t_f"]
    files, summary = [], {}
    # panel (a): frequency sweep at fixed amplitude
    nu_grid = np.round(np.arange(params["nu_min"], params["nu_max"] + 1e-9, params["nu_step"]), 12)
    # panel (b): amplitude sweep at fixed frequency
    xi_grid = np.round(np.arange(params["xi_min"], params["xi_max"] + 1e-9, params["xi_step"]), 12)
    for panel, grid, make in (
        ("a", nu_grid, lambda bath: (lambda v: ModulationConfig(params["xi"], v))),
        ("b", xi_grid, lambda bath: (lambda v: ModulationConfig(v, params["nu"]))),
    ):
        out_rows = None
        for lam in (params["lambda_a"], params["lambda_b"]):
            bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
            rows = _ramsey_axis_rows(grid, make(bath), sysp, bath, t_f, params["h"])
            if out_rows is None:
                out_rows = [[r[0]] for r in rows]
            for i, r in enumerate(rows):
                out_rows[i].extend(r[1:])
        axis = "nu" if panel == "a" else "xi"
        header = [axis,
                  "qfi_full_norm_lam_a", "qfi_approx_norm_lam_a", "abs_ratio_lam_a",
                  "qfi_full_norm_lam_b", "qfi_approx_norm_lam_b", "abs_ratio_lam_b"]
        path = os.path.join(outdir, f"fig4{panel}.csv")
        write_csv(path, header, out_rows)
        files.append(path)
        summary[f"fig4{panel}_max_qfi_norm"] = float(max(r[1] for r in out_rows))
    return files, summary


def run_fig5(params, outdir):
    sysp = SystemSpec(params["omega0"])
    t_f = params["t_f"]
    nu_grid = np.round(np.arange(params["nu_min"], params["nu_max"] + 1e-9, params["nu_step"]), 12)
    xi_grid = np.round(np.arange(params["xi_min"], params["xi_max"] + 1e-9, params["xi_step"]), 12)
    files, summary = [], {}
    for panel, lam in (("a", params["lambda_a"]), ("b", params["lambda_b"])):
        bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
        rows = []
        for nu in nu_grid:
            for xi in xi_grid:
                mod = ModulationConfig(float(xi), float(nu))
                h = params["h"] or max_step(bath, mod) / 2.0
                res = ramsey_point(sysp, bath, mod, t_f, h)
                rows.append((nu, xi, res.qfi_full / t_f**2, res.qfi_approx / t_f**2))
        path = os.path.join(outdir, f"fig5{panel}.csv")
        write_csv(path, ["nu", "xi", "qfi_full_norm", "qfi_approx_norm"], rows)
        files.append(path)
    return files, summary


def run_fig6(params, outdir):
    sysp = SystemSpec(params["omega0"])
    stats = _parse_stats(params["stats"])
    files, summary = [], {}
    for panel, lam in (("a", params["lambda_a"]), ("b", params["lambda_b"])):
        spec = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
        mod = ModulationConfig(params["xi"], params["nu"])
        h = params["h"] or max_step(spec, mod)
        series, tgrid = {}, None
        for temp in params["temp_values"]:
            bath = ThermalBathSpec(spec, temp, stats)
            table = build_kernel_table(bath, params["omega0"], params["t_max"], h)
            tr = tcl_propagate(bath, sysp, mod, 0.5, 0.5, table, params["t_max"], h)
            ss = steady_state_population(bath, sysp, mod)
            k = _stride(tr.t.size)
            tgrid = tr.t[::k]
            tag = f"T{int(temp)}"
            series[f"pe_{tag}"] = tr.p_e[::k]
            series[f"pe_steady_{tag}"] = np.full(tgrid.size, ss.p_e)
            series[f"abs_rho_eg_{tag}"] = np.abs(tr.rho_eg[::k])
            summary[f"fig6{panel}_steady_numeric_{tag}"] = float(tr.steady_estimate)
            summary[f"fig6{panel}_steady_analytic_{tag}"] = float(ss.p_e)
            summary[f"fig6{panel}_rho_eg_final_{tag}"] = float(np.abs(tr.rho_eg[-1]))
        path = os.path.join(outdir, f"fig6{panel}.csv")
        write_csv(path, ["omega_t"] + list(series), zip(tgrid, *series.values()))
        files.append(path)
    return files, summary


def _thermo_rows(temps, bath, sysp, mod):
    rows = []
    for t in temps:
        r = qfi_modulated(bath, sysp, mod, float(t))
        rows.append((t, r.p_e, r.p_low, r.p_high, r.qfi, r.qfi_low, r.qfi_high))
    return rows


def run_fig7(params, outdir):
    sysp = SystemSpec(params["omega0"])
    spec = LorentzianSpectrum(1.0, params["lambda"], params["omega0"] - params["delta_c"])
    bath = ThermalBathSpec(spec, 1.0, _parse_stats(params["stats"]))
    mod = ModulationConfig(params["xi"], params["nu"])
    temps = np.geomspace(params["temp_min"], params["temp_max"], int(params["temp_points"]))
    rows = _thermo_rows(temps, bath, sysp, mod)
    path = os.path.join(outdir, "fig7.csv")
    write_csv(path, ["T", "pe", "pe_low", "pe_high", "qfi", "qfi_low", "qfi_high"], rows)
    qfi = [r[4] for r in rows]
    from .thermo import count_local_maxima
    peaks = count_local_maxima(qfi)
    summary = {"fig7_n_peaks": len(peaks)}
    for i, p in enumerate(peaks):
        summary[f"fig7_peak{i}_T"] = float(temps[p])
    return [path], summary


def run_fig8(params, outdir):
    sysp = SystemSpec(params["omega0"])
    spec = LorentzianSpectrum(1.0, params["lambda"], params["omega0"] - params["delta_c"])
    bath = ThermalBathSpec(spec, 1.0, _parse_stats(params["stats"]))
    mod = ModulationConfig(params["xi"], params["nu"])
    temps = np.geomspace(params["temp_min"], params["temp_max"], int(params["temp_points"]))
    nus = np.round(np.arange(params["nu_min"], params["nu_max"] + 1e-9, params["nu_step"]), 12)
    rows, ridges = thermo_grid(temps, nus, bath, sysp, mod)
    path = os.path.join(outdir, "fig8.csv")
    write_csv(path, ["nu", "T", "qfi"], [(nu, t, r.qfi) for nu, t, r in rows])
    rpath = os.path.join(outdir, "fig8_ridges.csv")
    write_csv(rpath, ["nu", "T_low_peak", "T_high_peak"], ridges)
    return [path, rpath], {}


def run_figB1(params, outdir):
    n = int(params["grid_points"])
    x = np.linspace(0.0, params["grid_max"], n)
    y = np.linspace(0.0, params["grid_max"], n)
    rows = []
    gmin = np.inf
    for xv in x:
        g = g_function(xv, y)
        gmin = min(gmin, float(np.min(g)))
        rows.extend((xv, yv, gv) for yv, gv in zip(y, g))
    path = os.path.join(outdir, "figB1.csv")
    write_csv(path, ["x", "y", "g"], rows)
    return [path], {"figB1_min_g": gmin}


def run_figB2(params, outdir):
    sysp = SystemSpec(params["omega0"])
    files, summary = [], {}
    for panel, lam in (("a", params["lambda_a"]), ("b", params["lambda_b"])):
        bath = LorentzianSpectrum(1.0, lam, params["omega0"] - params["delta_c"])
        series, tgrid = {}, None
        for xi in params["xi_values"]:
            mod = ModulationConfig(xi, params["nu"])
            h = params["h"] or max_step(bath, mod) / 4.0
            tr = solve_sensitivity(sysp, bath, mod, SQ2, params["t_max"], h)
            k = _stride(tr.t.size)
            tgrid = tr.t[::k]
            tag = _xi_tag(xi)
            series[f"dr_numeric_xi{tag}"] = np.abs(tr.dc_e[::k] / tr.c_e0)
            series[f"dr_analytic_xi{tag}"] = np.abs(
                [derivative_analytic(t, sysp, bath, mod) for t in tgrid]
            )
        path = os.path.join(outdir, f"figB2{panel}.csv")
        write_csv(path, ["omega_t"] + list(series), zip(tgrid, *series.values()))
        files.append(path)
    return files, summary


def run_figD1(params, outdir):
    sysp = SystemSpec(params["omega0"])
    spec = LorentzianSpectrum(1.0, params["lambda"], params["omega0"] - params["delta_c"])
    mod = ModulationConfig(params["xi"], params["nu"])
    files, summary = [], {}
    # (a) dynamics at the low temperature
    bath = ThermalBathSpec(spec, params["temp_dyn"], Statistics.BOSONIC)
    h = params["h"] or max_step(spec, mod)
    table = build_kernel_table(bath, params["omega0"], params["t_max"], h)
    tr = tcl_propagate(bath, sysp, mod, 0.5, 0.5, table, params["t_max"], h)
    ss = steady_state_population(bath, sysp, mod)
    k = _stride(tr.t.size)
    path = os.path.join(outdir, "figD1a.csv")
    write_csv(
        path,
        ["omega_t", "pe", "pe_steady", "abs_rho_eg"],
        zip(tr.t[::k], tr.p_e[::k], np.full(tr.t[::k].size, ss.p_e), np.abs(tr.rho_eg[::k])),
    )
    files.append(path)
    summary["figD1a_steady_numeric"] = float(tr.steady_estimate)
    summary["figD1a_steady_analytic"] = float(ss.p_e)
    # (b) steady population and (c) QFI versus temperature
    temps = np.geomspace(params["temp_min"], params["temp_max"], int(params["temp_points"]))
    rows = _thermo_rows(temps, bath, sysp, mod)
    path_b = os.path.join(outdir, "figD1b.csv")
    write_csv(path_b, ["T", "pe", "pe_low", "pe_high"], [r[:4] for r in rows])
    path_c = os.path.join(outdir, "figD1c.csv")
    write_csv(path_c, ["T", "qfi", "qfi_low", "qfi_high"],
              [(r[0], r[4], r[5], r[6]) for r in rows])
    files.extend([path_b, path_c])
    from .thermo import count_local_maxima
    summary["figD1c_n_peaks"] = len(count_local_maxima([r[4] for r in rows]))
    return files, summary


def run_custom(params, outdir):
    """Single-parameter-point time evolution; thermal when a temperature is set."""
    sysp = SystemSpec(params["omega0"])
    spec = _spectrum(params)
    mod = ModulationConfig(params["xi"], params["nu"])
    h = params["h"] or max_step(spec, mod) / 4.0
    summary = {}
    if params["temp"] is None:
        tr = solve_amplitude_exact(sysp, spec, mod, SQ2, params["t_max"], h, c_g0=SQ2)
        ana = amplitude_analytic_curve(tr.t[:: _stride(tr.t.size)], sysp, spec, mod, SQ2)
        k = _stride(tr.t.size)
        path = os.path.join(outdir, "custom.csv")
        write_csv(path, ["omega_t", "pe_numeric", "pe_analytic"],
                  zip(tr.t[::k], np.abs(tr.c_e[::k]) ** 2, np.abs(ana) ** 2))
        summary["custom_pe_final"] = float(np.abs(tr.c_e[-1]) ** 2)
    else:
        bath = ThermalBathSpec(spec, params["temp"], _parse_stats(params["stats"]))
        h = params["h"] or max_step(spec, mod)
        table = build_kernel_table(bath, params["omega0"], params["t_max"], h)
        tr = tcl_propagate(bath, sysp, mod, 0.5, 0.5, table, params["t_max"], h)
        ss = steady_state_population(bath, sysp, mod)
        k = _stride(tr.t.size)
        path = os.path.join(outdir, "custom.csv")
        write_csv(path, ["omega_t", "pe", "abs_rho_eg"],
                  zip(tr.t[::k], tr.p_e[::k], np.abs(tr.rho_eg[::k])))
        summary["custom_steady_numeric"] = float(tr.steady_estimate)
        summary["custom_steady_analytic"] = float(ss.p_e)
    return [path], summary


# --------------------------------------------------------------------------
# configuration
# --------------------------------------------------------------------------

DEFAULTS: dict[str, dict] = {
    "fig1": dict(omega0=100.0, delta_c=0.0, nu=100.0, xi_values=[0.0, 2.0, 2.404],
                 lambda_a=5.0, lambda_b=0.2, t_max=100.0, h=None),
    "fig2": dict(omega0=100.0, delta_c=0.0, nu=100.0, xi_min=0.0, xi_max=8.0,
                 xi_step=0.05, lambda_a=5.0, lambda_b=0.2, t_max=100.0, h=None),
    "fig3": dict(omega0=100.0, delta_c=40.0, xi=2.0, nu_values=[50.0, 40.0],
                 lambda_a=5.0, lambda_b=0.2, t_max=100.0, h=None),
    "fig4": dict(omega0=100.0, delta_c=0.0, xi=2.404, nu=200.0, t_f=150.0,
                 nu_min=10.0, nu_max=300.0, nu_step=10.0,
                 xi_min=0.0, xi_max=8.0, xi_step=0.1,
                 lambda_a=5.0, lambda_b=0.2, h=None),
    "fig5": dict(omega0=100.0, delta_c=0.0, t_f=150.0,
                 nu_min=20.0, nu_max=300.0, nu_step=20.0,
                 xi_min=0.0, xi_max=8.0, xi_step=0.2,
                 lambda_a=5.0, lambda_b=0.2, h=None),
    "fig6": dict(omega0=31.0, delta_c=0.0, nu=30.0, xi=1.0, temp_values=[2.0, 20.0],
                 lambda_a=5.0, lambda_b=0.2, t_max=100.0, h=None, stats="fermionic"),
    "fig7": dict(omega0=31.0, delta_c=0.0, nu=30.0, xi=1.0, **{"lambda": 5.0},
                 temp_min=0.05, temp_max=50.0, temp_points=400, stats="fermionic"),
    "fig8": dict(omega0=31.0, delta_c=0.0, nu=30.0, xi=1.0, **{"lambda": 5.0},
                 temp_min=0.05, temp_max=50.0, temp_points=200,
                 nu_min=20.0, nu_max=30.0, nu_step=0.5, stats="fermionic"),
    "figB1": dict(grid_points=200, grid_max=10.0),
    "figB2": dict(omega0=100.0, delta_c=0.0, nu=100.0, xi_values=[1.0, 2.404],
                  lambda_a=5.0, lambda_b=0.2, t_max=60.0, h=None),
    "figD1": dict(omega0=31.0, delta_c=0.0, nu=30.0, xi=1.0, **{"lambda": 5.0},
                  temp_dyn=2.0, temp_min=0.05, temp_max=50.0, temp_points=300,
                  t_max=100.0, h=None, stats="bosonic"),
    "custom": dict(omega0=100.0, delta_c=0.0, nu=100.0, xi=2.0, **{"lambda": 5.0},
                   temp=None, stats="fermionic", t_max=100.0, h=None),
}

RUNNERS = {
    "fig1": run_fig1, "fig2": run_fig2, "fig3": run_fig3, "fig4": run_fig4,
    "fig5": run_fig5, "fig6": run_fig6, "fig7": run_fig7, "fig8": run_fig8,
    "figB1": run_figB1, "figB2": run_figB2, "figD1": run_figD1,
    "custom": run_custom,
}

RUNTIME_HINTS = {
    "fig1": "seconds", "fig2": "tens of seconds", "fig3": "seconds",
    "fig4": "about a minute", "fig5": "a few minutes", "fig6": "tens of seconds",
    "fig7": "seconds", "fig8": "seconds", "figB1": "seconds",
    "figB2": "seconds", "figD1": "tens of seconds", "custom": "seconds",
}

# override keys accepted on any figure, mapped onto its parameter set
_ALIAS_TARGETS = {
    "lambda": ("lambda", "lambda_a"),
    "nu": ("nu", "nu_values"),
    "xi": ("xi", "xi_values"),
    "temp": ("temp_dyn", "temp_values"),
}


def known_experiments() -> list[str]:
    return list(RUNNERS)


def resolve_config(fig_id: str, overrides: dict | None = None) -> dict:
    if fig_id not in DEFAULTS:
        raise KeyError(f"unknown experiment id '{fig_id}'")
    params = dict(DEFAULTS[fig_id])
    overrides = dict(overrides or {})
    omega_c = overrides.pop("omega_c", None)
    for key, raw in overrides.items():
        val = raw
        if key == "stats":
            _parse_stats(val)
        elif key in params or key in _ALIAS_TARGETS:
            val = None if raw in (None, "auto") else float(raw)
        if key in params:
            params[key] = val
        elif key in _ALIAS_TARGETS:
            hit = [t for t in _ALIAS_TARGETS[key] if t in params]
            if not hit:
                raise ValueError(f"parameter '{key}' does not apply to {fig_id}")
            for t in hit:
                params[t] = [val] if t.endswith("_values") else val
        else:
            raise ValueError(f"parameter '{key}' does not apply to {fig_id}")
    if omega_c is not None:
        if "delta_c" not in params:
            raise ValueError(f"parameter 'omega_c' does not apply to {fig_id}")
        params["delta_c"] = params["omega0"] - float(omega_c)
    return params


def validate_config(params: dict) -> list[str]:
    """Invariant diagnostics for a resolved parameter set (empty when valid)."""
    problems = []
    checks = {
        "lambda": lambda v: v > 0, "lambda_a": lambda v: v > 0,
        "lambda_b": lambda v: v > 0, "omega0": lambda v: v > 0,
        "nu": lambda v: v > 0, "xi": lambda v: v >= 0,
        "t_max": lambda v: v >= 0, "t_f": lambda v: v > 0,
        "temp_min": lambda v: v > 0, "temp_max": lambda v: v > 0,
        "temp_dyn": lambda v: v >= 0, "h": lambda v: v is None or v > 0,
    }
    for key, ok in checks.items():
        if key in params and params[key] is not None and not ok(params[key]):
            problems.append(f"invariant violated: {key} = {params[key]}")
    if "stats" in params:
        try:
            _parse_stats(params["stats"])
        except ValueError as exc:
            problems.append(str(exc))
    return problems


def run_experiment(fig_id: str, overrides: dict | None, outdir: str):
    """Runs one figure experiment; returns (written files, summary dict)."""
    params = resolve_config(fig_id, overrides)
    problems = validate_config(params)
    if problems:
        raise ValueError("; ".join(problems))
    os.makedirs(outdir, exist_ok=True)
    files, summary = RUNNERS[fig_id](params, outdir)
    spath = os.path.join(outdir, "summary.txt")
    entries = {"experiment": fig_id}
    entries.update({f"param_{k}": v for k, v in sorted(params.items())})
    entries.update(summary)
    write_summary(spath, entries)
    files.append(spath)
    return files, summary
