"""Run the bubble isolation strategy on random graphs and report leaks.

Each graph gets an optimal cutwidth layout; sources are drawn at random.
A leak is a burned vertex outside every initial bubble.
"""
import argparse
import random

import networkx as nx

from firefighter.bubbles import isolation_strategy
from firefighter.graph import build_graph
from firefighter.layout import exact_cutwidth


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--sources", type=int, default=2)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    runs = leaks = over = 0
    while runs < args.count:
        n = rng.randint(2, args.max_n)
        G = nx.gnp_random_graph(n, rng.uniform(0.1, 0.6), seed=rng.randrange(2**31))
        if not nx.is_connected(G):
            continue
        g = build_graph(n, list(G.edges()))
        _, lay = exact_cutwidth(g)
        sources = set(rng.sample(range(n), min(args.sources, n)))
        res = isolation_strategy(g, lay, sources)
        runs += 1
        if not res.confined:
            leaks += 1
            print(f"leak: n={n} edges={list(g.edges)} sources={sorted(sources)} "
                  f"escaped={sorted(res.escaped)}")
        over += not res.within_bound
    print(f"runs: {runs}  leaks: {leaks}  over bound: {over}")


if __name__ == "__main__":
    main()
