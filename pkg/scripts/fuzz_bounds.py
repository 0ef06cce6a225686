#!/usr/bin/env python3
"""Fuzz campaign over random pure states: min slack per bound at each size.

Example:
    python scripts/fuzz_bounds.py --count 500 --seed 11 --sizes 3 4 5 6
"""

import argparse
import time

import numpy as np

from qmonogamy import evaluate_all, random_haar_state


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=500, help="states per size")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    parser.add_argument("--tolerance", type=float, default=1e-7)
    args = parser.parse_args()

    grand_total = 0
    for n in args.sizes:
        t0 = time.time()
        worst = {}
        violations = 0
        for index in range(args.count):
            state = random_haar_state(n, np.random.default_rng([args.seed, n, index]))
            report = evaluate_all(state, tolerance=args.tolerance)
            for entry in report.entries:
                if entry.inequality not in worst or entry.slack < worst[entry.inequality]:
                    worst[entry.inequality] = entry.slack
                violations += 0 if entry.satisfied else 1
        grand_total += violations
        print(f"\nn={n}  ({args.count} states, {time.time() - t0:.1f}s, {violations} violations)")
        for name, slack in sorted(worst.items(), key=lambda kv: kv[1]):
            print(f"  {name:<30}{slack:>24.17g}")
    print(f"\ntotal violations: {grand_total}")
    return 0 if grand_total == 0 else 2


if __name__ == "__main__":
    raise SystemExit(main())
