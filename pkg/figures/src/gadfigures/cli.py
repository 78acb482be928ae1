"""``gadplot``: render a figure from CSV tables.

Usage::

    gadplot --figure {fig3|fig4|supp} --input a.csv [--input b.csv ...] \
            --output figure.pdf [--format {pdf,svg,png}]

The output format follows the ``--output`` suffix; vector PDF is the
default, and ``--format`` overrides both (use ``png`` for a raster
file).  Exit codes: 0 on success, 2 on unusable inputs or arguments.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import GadFiguresError
from .render import FIGURES, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gadplot",
        description="Render entropy-production figures from CSV tables.",
    )
    parser.add_argument("--figure", required=True, choices=FIGURES)
    parser.add_argument(
        "--input",
        action="append",
        required=True,
        metavar="CSV",
        help="input table; repeat for multi-panel or layered figures",
    )
    parser.add_argument("--output", required=True, help="image file to write")
    parser.add_argument(
        "--format",
        choices=("pdf", "svg", "png"),
        default=None,
        help="override the format implied by the output suffix "
        "(vector pdf by default; png for raster)",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        figure=args.figure,
        input_paths=tuple(args.input),
        output_path=args.output,
        image_format=args.format,
    )
    try:
        render(spec)
    except (GadFiguresError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
