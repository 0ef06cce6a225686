#!/usr/bin/env python3
"""Scan the weight-1 state family and summarize the two-sided bound gaps.

Writes the full per-pair CSV (plot-ready) and prints gap statistics.

Example:
    python scripts/scan_wclass.py --n 5 --count 200 --seed 3 --out scan5.csv
"""

import argparse

import numpy as np

from qmonogamy import wclass_bounds, wclass_state


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="CSV path (default: print summary only)")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = []
    gaps_lower, gaps_upper = [], []
    for _ in range(args.count):
        coeffs = np.sqrt(rng.dirichlet(np.ones(args.n))) * np.exp(
            1j * rng.uniform(0, 2 * np.pi, args.n)
        )
        state = wclass_state(coeffs)
        ctext = ";".join(f"{c.real:.17g}{c.imag:+.17g}j" for c in coeffs)
        for i in range(args.n):
            for j in range(i + 1, args.n):
                lower, mid, upper = wclass_bounds(state, i, j)
                gaps_lower.append(mid - lower)
                gaps_upper.append(upper - mid)
                rows.append(
                    f"{ctext},{i + 1}-{j + 1},{lower:.17g},{mid:.17g},{upper:.17g},"
                    f"{mid - lower:.17g},{upper - mid:.17g}"
                )

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("coefficients,pair,lower,mid,upper,gap_lower,gap_upper\n")
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {len(rows)} rows to {args.out}")

    gl, gu = np.array(gaps_lower), np.array(gaps_upper)
    print(f"n={args.n} count={args.count} pairs={len(rows)}")
    print(f"lower gap: min {gl.min():.3e}  mean {gl.mean():.3e}  max {gl.max():.3e}")
    print(f"upper gap: min {gu.min():.3e}  mean {gu.mean():.3e}  max {gu.max():.3e}")
    return 0 if gl.min() > -1e-7 and gu.min() > -1e-7 else 2


if __name__ == "__main__":
    raise SystemExit(main())
