#!/usr/bin/env python3
"""Count the rainbow-free exact r-colorings of Z_n for one equation.

Exact census by full partition enumeration (no pruning), so the counts are
ground truth: the first r with count 0 is the rainbow number.  Feasible up
to n ~ 13; the partition numbers grow like Bell(n).

Usage:
    python scripts/rainbow_free_census.py --modulus 9 --coeffs 1,1,1 --rhs 0
"""

from __future__ import annotations

import argparse
import sys
import time

from rainbownum import Equation, build_hypergraph, iter_exact_partitions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--modulus", type=int, required=True)
    parser.add_argument("--coeffs", required=True, help="a1,a2,a3")
    parser.add_argument("--rhs", type=int, default=0)
    parser.add_argument("--max-colors", type=int, default=None,
                        help="stop after this many colors (default: n)")
    args = parser.parse_args()

    try:
        a1, a2, a3 = (int(x) for x in args.coeffs.split(","))
    except ValueError:
        print("--coeffs wants three comma-separated integers", file=sys.stderr)
        return 1
    n = args.modulus
    eq = Equation(n, a1, a2, a3, args.rhs)
    hg = build_hypergraph(eq)
    print(f"{eq}: {len(hg.edges)} distinct-element solution sets")
    print(f"{'r':>3} {'partitions':>12} {'rainbow-free':>13} {'time':>8}")

    rb = n + 1
    top = min(args.max_colors or n, n)
    for r in range(1, top + 1):
        t0 = time.time()
        total = 0
        free = 0
        for assign in iter_exact_partitions(n, r):
            total += 1
            if hg.is_rainbow_free(assign):
                free += 1
        print(f"{r:>3} {total:>12} {free:>13} {time.time() - t0:>7.2f}s")
        if free == 0 and r >= 3 and rb == n + 1:
            rb = r
    if top == n:
        print(f"rb(Z_{n}, eq) = {rb}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
