#!/usr/bin/env python3
"""Sweep a (beta, gamma) grid and compare the closed-form line distance
against the brute-force oracle.

Writes one CSV row per line to stdout and a worst-case summary to stderr.

    python scripts/oracle_sweep.py
    python scripts/oracle_sweep.py --beta 0.1 4.0 --gamma -3 3 --steps 9
"""

import argparse
import sys

import numpy as np

import hestondist as hd


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", nargs=2, type=float, default=(0.1, 4.0),
                    metavar=("LO", "HI"))
    ap.add_argument("--gamma", nargs=2, type=float, default=(-3.0, 3.0),
                    metavar=("LO", "HI"))
    ap.add_argument("--steps", type=int, default=7)
    args = ap.parse_args()

    betas = np.linspace(*args.beta, args.steps)
    gammas = np.linspace(*args.gamma, args.steps)

    print("beta,gamma,formula,oracle,abs_diff,branch")
    worst = (0.0, None)
    for b in betas:
        for g in gammas:
            if b + g == 0.0:
                continue
            formula = hd.dist_to_line(float(b), float(g))
            reference = hd.oracle_dist(float(b), float(g))
            diff = abs(formula.value - reference.value)
            if diff > worst[0]:
                worst = (diff, (float(b), float(g)))
            print(f"{b:.12g},{g:.12g},{formula.value:.12g},"
                  f"{reference.value:.12g},{diff:.3e},{formula.branch}")
    print(f"worst |formula - oracle| = {worst[0]:.3e} at {worst[1]}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
