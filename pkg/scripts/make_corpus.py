"""Write a small benchmark corpus of edge-list files (used by `firefighter bench`)."""
import argparse
import random
from pathlib import Path

import networkx as nx

from firefighter.graph import build_graph, complete_graph, path_graph, star_graph
from firefighter.io import format_edge_list


def named_graphs():
    yield "path_p5", path_graph(5)
    yield "path_p8", path_graph(8)
    yield "star_k14", star_graph(4)
    yield "star_k16", star_graph(6)
    yield "triangle_k3", complete_graph(3)
    yield "complete_k5", complete_graph(5)
    yield "cycle_c7", build_graph(7, [(i, (i + 1) % 7) for i in range(7)])
    yield "binary_tree_d2", build_graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    yield "grid_3x3", build_graph(9, [(r * 3 + c, r * 3 + c + 1) for r in range(3) for c in range(2)]
                                  + [(r * 3 + c, (r + 1) * 3 + c) for r in range(2) for c in range(3)])
    yield "caterpillar_9", build_graph(9, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7), (3, 8)])


def random_graphs(count, seed):
    rng = random.Random(seed)
    made = 0
    while made < count:
        n = rng.randint(5, 9)
        G = nx.gnp_random_graph(n, rng.uniform(0.25, 0.6), seed=rng.randrange(2**31))
        if nx.is_connected(G):
            made += 1
            yield f"random_{made:02d}_n{n}", build_graph(n, list(G.edges()))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--random", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, g in [*named_graphs(), *random_graphs(args.random, args.seed)]:
        (out / f"{name}.txt").write_text(f"# {name}\n" + format_edge_list(g))
    print(f"wrote corpus to {out}")


if __name__ == "__main__":
    main()
