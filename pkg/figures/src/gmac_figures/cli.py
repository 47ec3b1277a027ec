"""Command line wrapper: plot_figures --fig {4,5,6} --in DIR --out FILE."""

from __future__ import annotations

import argparse
import sys

from .plotting import plot_figure


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_figures",
        description="Rebuild region-boundary figures from gmac-secrecy CSV files",
    )
    parser.add_argument("--fig", type=int, required=True, choices=(4, 5, 6))
    parser.add_argument("--in", dest="in_dir", required=True, help="directory with the CSV inputs")
    parser.add_argument("--out", required=True, help="SVG output path")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        path = plot_figure(args.fig, args.in_dir, args.out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
