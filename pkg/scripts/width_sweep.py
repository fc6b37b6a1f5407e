"""Exact cutwidth, pathwidth and bandwidth over all small connected graphs.

Prints, per vertex count, how many graphs there are and how often each of
the width inequalities is tight.
"""
import argparse
from collections import Counter

import networkx as nx

from firefighter.graph import build_graph
from firefighter.layout import exact_bandwidth, exact_cutwidth, exact_pathwidth


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7, help="at most 7 (graph atlas limit)")
    args = ap.parse_args()
    total, tight, bad = Counter(), Counter(), 0
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if not (1 <= n <= args.max_n) or not nx.is_connected(G):
            continue
        g = build_graph(n, list(G.edges()))
        cw, pw, bw = exact_cutwidth(g)[0], exact_pathwidth(g)[0], exact_bandwidth(g)[0]
        d = g.max_degree
        checks = {"pw<=cw": (pw, cw), "deg<=2cw": (d, 2 * cw), "cw<=pw*deg": (cw, pw * d),
                  "2cw<=bw(bw+1)": (2 * cw, bw * (bw + 1))}
        total[n] += 1
        for name, (lhs, rhs) in checks.items():
            bad += lhs > rhs
            tight[(n, name)] += lhs == rhs
    names = ["pw<=cw", "deg<=2cw", "cw<=pw*deg", "2cw<=bw(bw+1)"]
    print(f"{'n':>3}{'graphs':>8}" + "".join(f"{x:>16}" for x in names))
    for n in sorted(total):
        print(f"{n:>3}{total[n]:>8}" + "".join(f"{tight[(n, x)]:>16}" for x in names))
    print(f"violations: {bad}")


if __name__ == "__main__":
    main()
