#!/usr/bin/env python3
"""Emit the 5-profile plane figure data, with finite-tree overlays.

Produces the CSV consumed by any plotting frontend: the boundary line
(red), the inner polygon through the millipede limit points (blue), the
limit points themselves (m), and optionally a fourth series (finite) of
actual projections of d-millipedes at several finite lengths, so the
drift toward each limit point is visible in the same axes.

Usage: boundary_figure.py --out figure.csv [--d-max 8] [--samples 50]
       [--finite-lengths 5,10,20]
"""

from __future__ import annotations

import argparse
import io
import sys

from treelab.counting import fraction_to_decimal
from treelab.generators import make_millipede
from treelab.region import emit_figure_data, projection_point


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="target CSV path (default: stdout)")
    ap.add_argument("--d-max", type=int, default=8)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--precision", type=int, default=12)
    ap.add_argument("--finite-lengths", default="5,10,20",
                    help="millipede lengths for the finite overlay; empty to skip")
    args = ap.parse_args()

    buf = io.StringIO()
    emit_figure_data(args.d_max, buf, args.samples, args.precision)

    lengths = [int(x) for x in args.finite_lengths.split(",") if x]
    for d in range(0, args.d_max + 1):
        for length in lengths:
            p = projection_point(make_millipede(d, length))
            buf.write(
                f"finite,d{d}L{length},"
                f"{fraction_to_decimal(p.x, args.precision)},"
                f"{fraction_to_decimal(p.y, args.precision)},"
                f"{p.x.numerator}/{p.x.denominator},"
                f"{p.y.numerator}/{p.y.denominator}\n"
            )

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


if __name__ == "__main__":
    main()
