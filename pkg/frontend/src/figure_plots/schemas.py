"""Per-figure CSV schemas: file names and expected column layouts.

A schema is either an exact column list or a (first column, series-name
regexes) pair for figures whose series names carry parameter tags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class SchemaError(ValueError):
    """Raised when a CSV header does not match the figure schema."""


@dataclass(frozen=True)
class ExactSchema:
    columns: tuple[str, ...]

    def check(self, header: list[str], path: str) -> None:
        if tuple(header) != self.columns:
            raise SchemaError(
                f"{path}: column mismatch\n"
                f"  expected: {', '.join(self.columns)}\n"
                f"  found:    {', '.join(header)}"
            )


@dataclass(frozen=True)
class PatternSchema:
    first: str
    patterns: tuple[str, ...]

    def check(self, header: list[str], path: str) -> None:
        spec = f"{self.first}, then series matching {' | '.join(self.patterns)}"
        if not header or header[0] != self.first or len(header) < 2:
            raise SchemaError(
                f"{path}: column mismatch\n  expected: {spec}\n"
                f"  found:    {', '.join(header)}"
            )
        bad = [
            col for col in header[1:]
            if not any(re.fullmatch(p, col) for p in self.patterns)
        ]
        if bad:
            raise SchemaError(
                f"{path}: column mismatch\n  expected: {spec}\n"
                f"  unexpected columns: {', '.join(bad)}"
            )


_QFI_PANEL = (
    "qfi_full_norm_lam_a", "qfi_approx_norm_lam_a", "abs_ratio_lam_a",
    "qfi_full_norm_lam_b", "qfi_approx_norm_lam_b", "abs_ratio_lam_b",
)

SCHEMAS: dict[str, ExactSchema | PatternSchema] = {
    "fig1a.csv": ExactSchema(("omega_t", "pe_numeric_xi0", "pe_numeric_xi2",
                              "pe_numeric_xi2404", "pe_analytic_xi2",
                              "pe_analytic_xi2404")),
    "fig1b.csv": ExactSchema(("omega_t", "pe_numeric_xi0", "pe_numeric_xi2",
                              "pe_numeric_xi2404", "pe_analytic_xi2",
                              "pe_analytic_xi2404")),
    "fig2.csv": ExactSchema(("xi", "fid_numeric_lam_a", "fid_analytic_lam_a",
                             "fid_numeric_lam_b", "fid_analytic_lam_b")),
    "fig3.csv": PatternSchema("omega_t", (r"pe_(numeric|analytic)_nu[0-9.]+_lam[0-9]+",)),
    "fig4a.csv": ExactSchema(("nu",) + _QFI_PANEL),
    "fig4b.csv": ExactSchema(("xi",) + _QFI_PANEL),
    "fig5a.csv": ExactSchema(("nu", "xi", "qfi_full_norm", "qfi_approx_norm")),
    "fig5b.csv": ExactSchema(("nu", "xi", "qfi_full_norm", "qfi_approx_norm")),
    "fig6a.csv": PatternSchema("omega_t",
                               (r"pe_T[0-9]+", r"pe_steady_T[0-9]+", r"abs_rho_eg_T[0-9]+")),
    "fig6b.csv": PatternSchema("omega_t",
                               (r"pe_T[0-9]+", r"pe_steady_T[0-9]+", r"abs_rho_eg_T[0-9]+")),
    "fig7.csv": ExactSchema(("T", "pe", "pe_low", "pe_high",
                             "qfi", "qfi_low", "qfi_high")),
    "fig8.csv": ExactSchema(("nu", "T", "qfi")),
    "fig8_ridges.csv": ExactSchema(("nu", "T_low_peak", "T_high_peak")),
    "figB1.csv": ExactSchema(("x", "y", "g")),
    "figB2a.csv": PatternSchema("omega_t", (r"dr_(numeric|analytic)_xi[0-9]+",)),
    "figB2b.csv": PatternSchema("omega_t", (r"dr_(numeric|analytic)_xi[0-9]+",)),
    "figD1a.csv": ExactSchema(("omega_t", "pe", "pe_steady", "abs_rho_eg")),
    "figD1b.csv": ExactSchema(("T", "pe", "pe_low", "pe_high")),
    "figD1c.csv": ExactSchema(("T", "qfi", "qfi_low", "qfi_high")),
}

FIGURE_FILES: dict[str, list[str]] = {
    "fig1": ["fig1a.csv", "fig1b.csv"],
    "fig2": ["fig2.csv"],
    "fig3": ["fig3.csv"],
    "fig4": ["fig4a.csv", "fig4b.csv"],
    "fig5": ["fig5a.csv", "fig5b.csv"],
    "fig6": ["fig6a.csv", "fig6b.csv"],
    "fig7": ["fig7.csv"],
    "fig8": ["fig8.csv", "fig8_ridges.csv"],
    "figB1": ["figB1.csv"],
    "figB2": ["figB2a.csv", "figB2b.csv"],
    "figD1": ["figD1a.csv", "figD1b.csv", "figD1c.csv"],
}
