#!/usr/bin/env python3
"""Truncation error of open-lattice generating-operator elements vs Bessel values.

Prints one CSV row per (order, N) with the raw error, the resolved error
(zero when below the double-precision measurement floor), and whether the
element sits too close to the lattice edge to trust.

Example:
    python scripts/circle_convergence.py --x 6.0 --N 8,12,16,24 --orders 0,1,3
"""

import argparse

from superhyp.circle import convergence_study
from superhyp.cli import parse_complex


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--x", type=float, default=6.0)
    parser.add_argument("--w", type=parse_complex, default=1.0 + 0j)
    parser.add_argument("--N", default="8,12,16,24", help="increasing comma list")
    parser.add_argument("--orders", default="0,1,3", help="comma list of m-k offsets")
    args = parser.parse_args()

    n_list = [int(v) for v in args.N.split(",")]
    print("order,N,error,resolved,boundary_limited")
    for order in (int(v) for v in args.orders.split(",")):
        for point in convergence_study(n_list, args.x, args.w, order):
            print(
                f"{order},{point.N},{point.error!r},{point.resolved!r},"
                f"{point.boundary_limited}"
            )


if __name__ == "__main__":
    main()
