"""Pass/stop-band map of a periodic two-medium multilayer.

For a fixed boundary rapidity, scan the two layer phases and mark each cell
'.' when the period is elliptic (bounded transmission through many periods),
'#' when hyperbolic (evanescent, stop band) and '+' on the parabolic edge.
"""

import argparse
import math

import numpy as np

from loropt.decomp import classify
from loropt.multilayer import LayerPair, iwasawa_scan, period_sp2, run_periods

MARK = {"elliptic": ".", "hyperbolic": "#", "parabolic": "+"}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eta", type=float, default=0.6)
    ap.add_argument("--n", type=int, default=48, help="grid cells per phase axis")
    ap.add_argument("--periods", type=int, default=100)
    args = ap.parse_args()

    phases = np.linspace(0, 2 * math.pi, args.n)
    counts = dict.fromkeys(MARK, 0)
    print(f"boundary rapidity {args.eta}; rows phi1, columns phi2, both over [0, 2 pi]")
    for phi1 in phases:
        row = []
        for phi2 in phases:
            k = classify(period_sp2(LayerPair(args.eta, phi1, phi2)))
            counts[k] += 1
            row.append(MARK[k])
        print("".join(row))
    total = sum(counts.values())
    print(", ".join(f"{k}: {100 * v / total:.1f}%" for k, v in counts.items()))

    sample = LayerPair(args.eta, 0.9, 1.3)
    rep = run_periods(sample, args.periods)
    print(f"sample {sample}: class {rep.klass}, max entry after {args.periods} "
          f"periods {np.max(np.abs(rep.matrix)):.4f}")
    w = iwasawa_scan(sample)
    if w is not None:
        print(f"triangular witness: theta {w.theta:.6f}, lower-left {w.matrix[1, 0]:.6f}")


if __name__ == "__main__":
    main()
