"""Figure rendering from the experiment CSVs.

Numeric series are drawn as sparse markers, analytic/approximate series as
solid lines, so the two routes can be compared at a glance.  Thermometry
plots use a logarithmic temperature axis.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schemas import FIGURE_FILES, SCHEMAS, SchemaError

STYLE = {
    "numeric_markers": ("^", "d", "o", "s", "v", "x"),
    "colors": ("tab:blue", "tab:orange", "tab:green", "tab:red",
               "tab:purple", "tab:brown"),
    "marker_count": 40,
    "contour_levels": 41,
    "cmap": "viridis",
}


def read_csv(path: str) -> dict[str, np.ndarray]:
    """Reads one experiment CSV and validates it against the figure schema."""
    name = os.path.basename(path)
    if name not in SCHEMAS:
        raise SchemaError(f"{path}: no schema for file name '{name}'")
    with open(path, newline="") as f:
        first = f.readline()
        if not first.startswith("#"):
            raise SchemaError(f"{path}: missing units comment line")
        reader = csv.reader(f)
        header = next(reader)
        rows = [[float(v) for v in row] for row in reader if row]
    SCHEMAS[name].check(header, path)
    data = np.array(rows)
    return {col: data[:, i] for i, col in enumerate(header)}


def _marker_stride(n: int) -> int:
    return max(1, n // STYLE["marker_count"])


def _series_plot(ax, x, cols, numeric_key="numeric", analytic_key="analytic"):
    """Numeric columns as markers, analytic columns as lines, paired by tag."""
    numeric = [c for c in cols if numeric_key in c]
    analytic = [c for c in cols if analytic_key in c]
    others = [c for c in cols if c not in numeric and c not in analytic]
    stride = _marker_stride(x.size)
    for i, name in enumerate(numeric):
        ax.plot(x[::stride], cols[name][::stride],
                STYLE["numeric_markers"][i % len(STYLE["numeric_markers"])],
                color=STYLE["colors"][i % len(STYLE["colors"])],
                markersize=4, linestyle="none", label=name)
    for i, name in enumerate(analytic):
        ax.plot(x, cols[name], "-",
                color=STYLE["colors"][i % len(STYLE["colors"])], label=name)
    for i, name in enumerate(others):
        ax.plot(x, cols[name], "--",
                color=STYLE["colors"][(len(numeric) + i) % len(STYLE["colors"])],
                label=name)
    ax.legend(fontsize=7)


def _save(fig, out_path):
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def _render_lines(path, out_path, xlabel, ylabel, logx=False, logy=False):
    data = read_csv(path)
    cols = list(data)
    x = data[cols[0]]
    fig, ax = plt.subplots(figsize=(5, 3.4))
    _series_plot(ax, x, {c: data[c] for c in cols[1:]})
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    _save(fig, out_path)


def _render_contour(path, out_path, xcol, ycol, zcol, overlay=None):
    data = read_csv(path)
    x = np.unique(data[xcol])
    y = np.unique(data[ycol])
    z = data[zcol].reshape(x.size, y.size)
    fig, ax = plt.subplots(figsize=(5, 3.8))
    m = ax.contourf(x, y, z.T, levels=STYLE["contour_levels"], cmap=STYLE["cmap"])
    fig.colorbar(m, ax=ax, label=zcol)
    if overlay is not None:
        overlay(ax)
    ax.set_xlabel(xcol)
    ax.set_ylabel(ycol)
    _save(fig, out_path)


def render_fig1(in_dir, out_dir):
    out = []
    for name in FIGURE_FILES["fig1"]:
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        _render_lines(os.path.join(in_dir, name), dst,
                      "time (coupling units)", "excited population")
        out.append(dst)
    return out


def render_fig2(in_dir, out_dir):
    dst = os.path.join(out_dir, "fig2.png")
    _render_lines(os.path.join(in_dir, "fig2.csv"), dst,
                  "drive amplitude", "fidelity")
    return [dst]


def render_fig3(in_dir, out_dir):
    dst = os.path.join(out_dir, "fig3.png")
    _render_lines(os.path.join(in_dir, "fig3.csv"), dst,
                  "time (coupling units)", "excited population")
    return [dst]


def render_fig4(in_dir, out_dir):
    out = []
    for name, xlabel in (("fig4a.csv", "drive frequency"),
                         ("fig4b.csv", "drive amplitude")):
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        data = read_csv(os.path.join(in_dir, name))
        cols = list(data)
        fig, ax = plt.subplots(figsize=(5, 3.4))
        keep = {c: data[c] for c in cols[1:] if c.startswith("qfi")}
        _series_plot(ax, data[cols[0]], keep,
                     numeric_key="full", analytic_key="approx")
        ax.set_xlabel(xlabel)
        ax.set_ylabel("QFI / T_f^2")
        _save(fig, dst)
        out.append(dst)
    return out


def render_fig5(in_dir, out_dir):
    out = []
    for name in FIGURE_FILES["fig5"]:
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        _render_contour(os.path.join(in_dir, name), dst, "nu", "xi", "qfi_full_norm")
        out.append(dst)
    return out


def render_fig6(in_dir, out_dir):
    out = []
    for name in FIGURE_FILES["fig6"]:
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        _render_lines(os.path.join(in_dir, name), dst,
                      "time (coupling units)", "population / coherence")
        out.append(dst)
    return out


def render_fig7(in_dir, out_dir):
    data = read_csv(os.path.join(in_dir, "fig7.csv"))
    fig, axes = plt.subplots(2, 1, figsize=(5, 6), sharex=True)
    for ax, group in zip(axes, (("pe", "pe_low", "pe_high"),
                                ("qfi", "qfi_low", "qfi_high"))):
        for i, col in enumerate(group):
            style = "-" if i == 0 else "--"
            ax.plot(data["T"], data[col], style,
                    color=STYLE["colors"][i], label=col)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_ylabel(group[0])
        ax.legend(fontsize=7)
    axes[1].set_xlabel("temperature (coupling units)")
    dst = os.path.join(out_dir, "fig7.png")
    _save(fig, dst)
    return [dst]


def render_fig8(in_dir, out_dir):
    ridges = read_csv(os.path.join(in_dir, "fig8_ridges.csv"))

    def overlay(ax):
        ax.plot(ridges["nu"], ridges["T_low_peak"], "--", color="tab:blue",
                label="low-peak ridge")
        ax.plot(ridges["nu"], ridges["T_high_peak"], ":", color="black",
                label="high-peak ridge")
        ax.legend(fontsize=7)

    dst = os.path.join(out_dir, "fig8.png")
    _render_contour(os.path.join(in_dir, "fig8.csv"), dst, "nu", "T", "qfi",
                    overlay=overlay)
    return [dst]


def render_figB1(in_dir, out_dir):
    dst = os.path.join(out_dir, "figB1.png")
    _render_contour(os.path.join(in_dir, "figB1.csv"), dst, "x", "y", "g")
    return [dst]


def render_figB2(in_dir, out_dir):
    out = []
    for name in FIGURE_FILES["figB2"]:
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        _render_lines(os.path.join(in_dir, name), dst,
                      "time (coupling units)", "|dR / d omega0|")
        out.append(dst)
    return out


def render_figD1(in_dir, out_dir):
    out = []
    dst = os.path.join(out_dir, "figD1a.png")
    _render_lines(os.path.join(in_dir, "figD1a.csv"), dst,
                  "time (coupling units)", "population / coherence")
    out.append(dst)
    for name, ylabel in (("figD1b.csv", "excited population"),
                         ("figD1c.csv", "QFI")):
        dst = os.path.join(out_dir, name.replace(".csv", ".png"))
        _render_lines(os.path.join(in_dir, name), dst,
                      "temperature (coupling units)", ylabel,
                      logx=True, logy=True)
        out.append(dst)
    return out


RENDERERS = {
    "fig1": render_fig1, "fig2": render_fig2, "fig3": render_fig3,
    "fig4": render_fig4, "fig5": render_fig5, "fig6": render_fig6,
    "fig7": render_fig7, "fig8": render_fig8, "figB1": render_figB1,
    "figB2": render_figB2, "figD1": render_figD1,
}


def render(fig_id: str, in_dir: str, out_dir: str) -> list[str]:
    """Renders one figure id; returns the written image paths."""
    if fig_id not in RENDERERS:
        raise KeyError(f"unknown figure id '{fig_id}'")
    os.makedirs(out_dir, exist_ok=True)
    return RENDERERS[fig_id](in_dir, out_dir)
