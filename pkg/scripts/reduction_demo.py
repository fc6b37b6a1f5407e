"""Build hardness trees for random formulas and check the burn arithmetic.

For each formula the script builds the tree, plays the strategy read off
every 1-in-3 solution, and compares the burned count against k. It also
validates the width-3 decomposition.
"""
import argparse
import random
import time

from firefighter import gadgets as gd
from firefighter.layout import validate_path_decomposition
from firefighter.propagation import Instance, simulate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--per-size", type=int, default=3)
    ap.add_argument("--budget", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'n':>3}{'vertices':>10}{'k':>6}{'solutions':>11}{'exact':>7}{'pw':>4}{'secs':>7}")
    for n in args.sizes:
        for _ in range(args.per_size):
            t0 = time.perf_counter()
            f = gd.random_cubic_monotone(n, rng)
            tree = gd.build_reduction(f, args.budget)
            sols = list(gd.all_1in3_solutions(f))
            exact = all(
                len(simulate(Instance(tree.graph, tree.source, args.budget),
                             gd.strategy_from_assignment(tree, tau)).burned) == tree.k
                for tau in sols)
            pw = validate_path_decomposition(tree.graph, gd.path_decomposition_pw3(tree))
            print(f"{n:>3}{tree.graph.n:>10}{tree.k:>6}{len(sols):>11}{str(exact):>7}{pw:>4}"
                  f"{time.perf_counter() - t0:>7.2f}")


if __name__ == "__main__":
    main()
