"""Command-line front end: `dynmod <experiment-id>` reproduces one figure as
deterministic CSV files, `dynmod validate <experiment-id>` echoes the resolved
configuration without writing anything."""

from __future__ import annotations

import argparse
import sys

from .experiments import (
    RUNTIME_HINTS,
    known_experiments,
    resolve_config,
    run_experiment,
    validate_config,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN_ID = 2

_OVERRIDE_FLAGS = [
    ("--xi", "xi"), ("--nu", "nu"), ("--lambda", "lambda"),
    ("--omega0", "omega0"), ("--temp", "temp"), ("--stats", "stats"),
    ("--delta-c", "delta_c"), ("--omega-c", "omega_c"),
    ("--t-max", "t_max"), ("--h", "h"), ("--t-f", "t_f"),
    ("--temp-points", "temp_points"),
]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynmod",
        description="Modulated-qubit dynamics and Fisher-information experiments.",
    )
    parser.add_argument("command", help="experiment id, or 'validate'")
    parser.add_argument("experiment", nargs="?", default=None,
                        help="experiment id when the command is 'validate'")
    parser.add_argument("--out", default=".", help="output directory")
    parser.add_argument("--config", default=None,
                        help="flat key = value file of parameter overrides")
    for flag, dest in _OVERRIDE_FLAGS:
        parser.add_argument(flag, dest=f"ov_{dest}", default=None, metavar="V")
    return parser


def _read_config_file(path: str) -> dict:
    overrides = {}
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            overrides[key.replace("-", "_")] = val
    return overrides


def _collect_overrides(args) -> dict:
    overrides = {}
    if args.config:
        overrides.update(_read_config_file(args.config))
    for _, dest in _OVERRIDE_FLAGS:
        val = getattr(args, f"ov_{dest}")
        if val is not None:
            overrides[dest] = val
    return overrides


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    validate_only = args.command == "validate"
    fig_id = args.experiment if validate_only else args.command
    if validate_only and fig_id is None:
        print("error: 'validate' requires an experiment id", file=sys.stderr)
        return EXIT_ERROR
    if fig_id not in known_experiments():
        print(f"error: unknown experiment id '{fig_id}'", file=sys.stderr)
        return EXIT_UNKNOWN_ID

    try:
        overrides = _collect_overrides(args)
        params = resolve_config(fig_id, overrides)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if validate_only:
        problems = validate_config(params)
        print(f"experiment = {fig_id}")
        for key in sorted(params):
            print(f"{key} = {params[key]}")
        print(f"estimated_runtime = {RUNTIME_HINTS[fig_id]}")
        for p in problems:
            print(f"diagnostic: {p}")
        return EXIT_OK

    try:
        files, _ = run_experiment(fig_id, overrides, args.out)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for path in files:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
