#!/usr/bin/env python3
"""Tabulate nearest-neighbor class counts, density, and the short:long
ratio over a range of radii, as a quick numerical look at the
quasi-periodic structure.

Usage: python scripts/distance_census.py [max_radius]
"""

import math
import sys

from pentaset.modelset import analyze, enumerate_points, stats


def main() -> None:
    max_radius = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    print(f"{'R':>4} {'points':>7} {'short':>6} {'long':>6} "
          f"{'ratio':>7} {'density':>8}")
    for r in range(2, max_radius + 1, 2):
        summary = stats(analyze(enumerate_points(r * r)))
        c = summary["classes"]
        ratio = summary["short_long_ratio"]
        print(f"{r:>4} {summary['count']:>7} {c['short']:>6} {c['long']:>6} "
              f"{ratio:>7.3f} {summary['density']:>8.4f}")
    print(f"model-set density limit: {4 * math.pi / math.sqrt(125):.4f}")


if __name__ == "__main__":
    main()
