"""`plot_figures <figure-id|all> --in DIR --out DIR`"""

from __future__ import annotations

import argparse
import sys

from .render import RENDERERS, render
from .schemas import SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_figures",
        description="Render experiment CSVs as figure images.",
    )
    parser.add_argument("figure", help="figure id, or 'all'")
    parser.add_argument("--in", dest="in_dir", required=True,
                        help="directory holding the CSV files")
    parser.add_argument("--out", dest="out_dir", default=".",
                        help="directory for the rendered images")
    args = parser.parse_args(argv)

    ids = list(RENDERERS) if args.figure == "all" else [args.figure]
    if args.figure != "all" and args.figure not in RENDERERS:
        print(f"error: unknown figure id '{args.figure}'", file=sys.stderr)
        return 2

    status = 0
    for fig_id in ids:
        try:
            for path in render(fig_id, args.in_dir, args.out_dir):
                print(path)
        except (SchemaError, OSError, ValueError) as exc:
            print(f"error: {fig_id}: {exc}", file=sys.stderr)
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
