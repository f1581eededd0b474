#!/usr/bin/env python3
"""Time the spectral circulant exponential against dense scaling-and-squaring.

Example:
    python scripts/bench_circulant_exp.py --n 64,128,256,512 --x 1.0
"""

import argparse
import json
import time

from superhyp.algebra import mat_exp, shift_matrix
from superhyp.hyperbolic import exp_circulant


def median_ms(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1e3)
    times.sort()
    return times[len(times) // 2], times


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="64,128,256", help="comma list of sizes")
    parser.add_argument("--x", type=float, default=1.0)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rows = []
    for n in (int(v) for v in args.n.split(",")):
        spectral, _ = median_ms(lambda: exp_circulant(n, args.x), args.repeats)
        s = shift_matrix(n)
        dense, _ = median_ms(lambda: mat_exp(args.x * s), args.repeats)
        rows.append(
            {
                "n": n,
                "spectral_ms": spectral,
                "dense_ms": dense,
                "speedup": dense / spectral,
            }
        )
        print(json.dumps(rows[-1], sort_keys=True))


if __name__ == "__main__":
    main()
