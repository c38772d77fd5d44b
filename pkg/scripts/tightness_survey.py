#!/usr/bin/env python3
"""Which refinement of the squared-radius sandwich is sharpest, per ensemble?

For each family and dimension this draws a batch, runs tightness_compare,
and tabulates how often each candidate wins on the lower and the upper side
together with the median relative gap to w(A)^2.

Usage: python scripts/tightness_survey.py [--count N] [--dims 2 5 10]
"""

import argparse
from collections import Counter

import numpy as np

from numrad.ensembles import EnsembleSpec, generate, tightness_compare
from numrad.radius import RadiusConfig


def survey(family: str, dim: int, count: int, seed: int, cfg: RadiusConfig):
    spec = EnsembleSpec(family, dim, count, seed=seed)
    lower_wins = Counter()
    upper_wins = Counter()
    lower_gaps = []
    upper_gaps = []
    for k in range(count):
        out = tightness_compare(generate(spec, k), cfg)
        lower_wins[out["sharpest_lower"]] += 1
        upper_wins[out["sharpest_upper"]] += 1
        w2 = out["omega_sq"]
        if w2 > 0:
            lo = out["lower_bounds_sq"][out["sharpest_lower"]]
            hi = out["upper_bounds_sq"][out["sharpest_upper"]]
            lower_gaps.append((w2 - lo) / w2)
            upper_gaps.append((hi - w2) / w2)
    return lower_wins, upper_wins, np.median(lower_gaps), np.median(upper_gaps)


def _fmt_wins(wins: Counter, total: int) -> str:
    return " ".join(f"{k}:{v / total:.0%}" for k, v in wins.most_common())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200, help="draws per cell")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 5, 10])
    ap.add_argument(
        "--families", nargs="+",
        default=["ginibre", "gue", "nilpotent-shift-random", "normal", "rank1"],
    )
    args = ap.parse_args()

    cfg = RadiusConfig()
    for family in args.families:
        for dim in args.dims:
            lw, uw, lg, ug = survey(family, dim, args.count, args.seed, cfg)
            print(
                f"{family:<24} n={dim:<3} "
                f"lower[{_fmt_wins(lw, args.count)}] gap {lg:7.1%}   "
                f"upper[{_fmt_wins(uw, args.count)}] gap {ug:7.1%}"
            )


if __name__ == "__main__":
    main()
