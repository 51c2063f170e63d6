#!/usr/bin/env python3
"""Measure how the bivector residual of the standard-score average shrinks.

For each trial count n, the residual norm |mean(lam) * (a x b)| is averaged
over a family of seeds; the fitted log-log slope against n should sit at
-1/2 (fair-coin cancellation rate).
"""

import argparse
import math

import numpy as np

from cliffsphere.epr import lambda_stream, residual_convergence_slope
from cliffsphere.frames import cross


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=20, help="number of seeds (0..k-1)")
    parser.add_argument(
        "--sizes", default="100,1000,10000,100000,1000000",
        help="comma-separated trial counts",
    )
    return parser.parse_args()


def run():
    args = parse_args()
    sizes = sorted(int(s) for s in args.sizes.split(","))
    seeds = range(args.seeds)
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([0.0, 1.0, 0.0])
    scale = float(np.linalg.norm(cross(a, b)))

    print(f"{'n':>10}  {'mean residual':>14}  {'1/sqrt(n)':>12}")
    for n in sizes:
        residuals = [
            abs(int(lambda_stream(seed, n).astype(np.int64).sum())) / n * scale
            for seed in seeds
        ]
        print(f"{n:10d}  {np.mean(residuals):14.6e}  {1 / math.sqrt(n):12.6e}")

    slope = residual_convergence_slope(a, b, seeds=seeds, sizes=sizes)
    print(f"\nfitted log-log slope over {args.seeds} seeds: {slope:+.4f} (target -0.5)")


if __name__ == "__main__":
    run()
