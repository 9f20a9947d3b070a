"""Scan the symmetric cavity parameter x = z/f and report stability and growth.

For each x the largest entry of the N-cycle matrix is shown; it stays
bounded for 0 < x < 2 and grows geometrically (linearly at x = 2) otherwise.
"""

import argparse

import numpy as np

from loropt.cavity import CavityConfig, run_cavity
from loropt.mat_core import RangeError


def largest_entry(x, n):
    try:
        m = run_cavity(CavityConfig(x, n)).matrix
    except RangeError:
        return f"{'overflow':>11}"
    return f"{np.max(np.abs(m)):11.3e}" if np.all(np.isfinite(m)) else f"{'overflow':>11}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--xmin", type=float, default=0.25)
    ap.add_argument("--xmax", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=12)
    ap.add_argument("--cycles", type=int, nargs="+", default=[1, 10, 100, 10**6])
    args = ap.parse_args()

    xs = np.unique(np.append(np.linspace(args.xmin, args.xmax, args.steps), 2.0))
    head = " ".join(f"{'N=' + str(n):>11}" for n in args.cycles)
    print(f"{'x':>6} {'branch':>10} {'eta':>9} {head}")
    for x in xs:
        first = run_cavity(CavityConfig(float(x), 1))
        eta = first.eta
        sizes = " ".join(largest_entry(float(x), n) for n in args.cycles)
        eta_txt = f"{eta:9.4f}" if eta is not None else f"{'-':>9}"
        print(f"{x:6.3f} {first.branch:>10} {eta_txt} {sizes}")


if __name__ == "__main__":
    main()
