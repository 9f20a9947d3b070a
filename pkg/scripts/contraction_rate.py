"""Measure how fast the rescaled boosted rotation generators approach N1, N2.

Prints a table of rapidity vs. entrywise error and the fitted log slope.
"""

import argparse
import math

import numpy as np

from loropt.little_group import contract


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=float, default=1.0)
    ap.add_argument("--hi", type=float, default=14.0)
    ap.add_argument("--steps", type=int, default=14)
    args = ap.parse_args()

    rep = contract(np.linspace(args.lo, args.hi, args.steps))
    print(f"{'eta':>6} {'err N1':>12} {'err N2':>12} {'e^-2eta':>12}")
    for eta, e1, e2 in zip(rep.eta, rep.error, rep.error_n2):
        print(f"{eta:6.2f} {e1:12.4e} {e2:12.4e} {math.exp(-2 * eta):12.4e}")
    print(f"fitted slope of ln(error) vs eta: {rep.log_slope():.6f}")


if __name__ == "__main__":
    main()
