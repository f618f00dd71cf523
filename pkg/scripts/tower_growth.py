#!/usr/bin/env python3
"""Grow a product tower and watch the spectral gap double each level.

Usage: python3 scripts/tower_growth.py [depth] [budget]
"""

import sys

from zigzag import (
    TowerConfig,
    adjacency_spectrum,
    build_tower,
    constant_labeling,
    cycle,
    path,
    tower_spectrum_check,
)


def main():
    depth = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    budget = int(sys.argv[2]) if len(sys.argv) > 2 else 100_000

    g = cycle(4)
    h = path(3)
    a = constant_labeling(g, h, 1)
    build = build_tower(g, h, a, depth, TowerConfig(budget=budget))
    report = tower_spectrum_check(build)

    print(f"tower over a 4-cycle, labels at the path center, valency m={build.valency}")
    print(f"{'level':>5} {'|V|':>8} {'|E|':>10} {'rho':>10} {'gap':>10} {'cover':>6}")
    for lv, summary in zip(build.levels, report.levels):
        rho = "-" if summary.rho is None else f"{summary.rho:.6g}"
        gap = "-" if summary.gap is None else f"{summary.gap:.6g}"
        cover = "-" if summary.cover_index is None else str(summary.cover_index)
        print(f"{summary.index:>5} {summary.vertices:>8} {summary.edges:>10} {rho:>10} {gap:>10} {cover:>6}")
    if build.truncated:
        print(f"stopped early: next level exceeds the {budget}-vertex budget")
    for pair in report.pairs:
        print(
            f"levels {pair.lower}->{pair.upper}: spectrum scaling {pair.scaling}, "
            f"Laplacian containment {pair.containment}, gap scaling {pair.gap}"
        )
    # The base spectrum reappears, rescaled, at every level that we solved.
    base = adjacency_spectrum(g)
    print(f"base spectrum: {['%g' % x for x in base.eigenvalues]}, gap {base.gap:g}")


if __name__ == "__main__":
    main()
