#!/usr/bin/env python3
"""Boundary ratios of growing arcs in a cycle, upstairs and downstairs.

The product of each arc embeds in the product of the cycle; its boundary
there stays within D^2 times the arc boundary, so vanishing ratios persist.

Usage: python3 scripts/folner_arcs.py [cycle_length]
"""

import sys

from zigzag import constant_labeling, cycle, folner_product_check, path


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    g = cycle(n)
    h = path(3)
    a = constant_labeling(g, h, 1)
    chain = [list(range(k)) for k in range(n // 6, n, n // 6)]

    report = folner_product_check(g, h, a, chain)
    print(f"arcs in a {n}-cycle, product with the 3-path, D = {report.max_label_degree}")
    print(f"{'|F|':>6} {'|bd F|':>7} {'ratio':>8} {'|FxH|':>7} {'|bd FxH|':>9} {'bound':>6} {'ratio':>8}")
    for s in report.steps:
        pr = "-" if s.product_ratio is None else str(s.product_ratio)
        print(
            f"{s.size:>6} {s.boundary_size:>7} {str(s.ratio):>8} "
            f"{s.product_size:>7} {s.product_boundary_size:>9} {s.bound:>6} {pr:>8}"
        )
    print("bound held everywhere" if report.all_ok else "BOUND VIOLATED")


if __name__ == "__main__":
    main()
