#!/usr/bin/env python3
"""Emit the zero-maturity implied-volatility smile for a strike ladder.

    python scripts/smile_curve.py --spot 100 --v0 0.04 --c 1.5 --rho -0.6
"""

import argparse
import math
import sys

import hestondist as hd


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--spot", type=float, default=100.0)
    ap.add_argument("--v0", type=float, default=0.04)
    ap.add_argument("--c", type=float, default=1.5)
    ap.add_argument("--rho", type=float, default=-0.6)
    ap.add_argument("--width", type=float, default=0.5,
                    help="half-width of the log-moneyness ladder")
    ap.add_argument("--n", type=int, default=25,
                    help="strikes per side of the money")
    args = ap.parse_args()

    frame = hd.CorrelationFrame(args.c, args.rho)
    ms = [args.width * k / args.n for k in range(1, args.n + 1)]
    strikes = sorted(
        args.spot * math.exp(s * m) for m in ms for s in (-1.0, 1.0)
    )
    print("strike,log_moneyness,beta,gamma,distance,iv_limit")
    for entry in hd.smile_table(args.spot, args.v0, frame, strikes):
        if isinstance(entry, hd.SmileFailure):
            print(f"# strike {entry.strike}: {entry.error}", file=sys.stderr)
            continue
        print(f"{entry.strike:.12g},{entry.log_moneyness:.12g},"
              f"{entry.line_beta:.12g},{entry.line_gamma:.12g},"
              f"{entry.distance:.12g},{entry.iv_limit:.12g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
