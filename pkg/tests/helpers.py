"""Graph corpora shared by the test modules."""
from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from firefighter.graph import Graph, build_graph


def from_nx(G) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return build_graph(len(mapping), [(mapping[u], mapping[v]) for u, v in G.edges()])


def connected_graphs(max_n: int):
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= max_n and nx.is_connected(G):
            yield from_nx(G)


def trees(max_n: int):
    """Every tree on 1..max_n vertices up to isomorphism."""
    yield build_graph(1, [])
    for n in range(2, max_n + 1):
        for T in nx.nonisomorphic_trees(n):
            yield from_nx(T)


def random_connected(count: int, max_n: int, seed: int, min_n: int = 2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        G = nx.gnp_random_graph(n, rng.uniform(0.15, 0.9), seed=rng.randrange(2**31))
        if nx.is_connected(G):
            out.append(from_nx(G))
    return out


def brute_force_cutwidth(g: Graph) -> int:
    from itertools import permutations
    best = None
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        w = max((sum(1 for u, v in g.edges if min(pos[u], pos[v]) <= i < max(pos[u], pos[v]))
                 for i in range(g.n - 1)), default=0)
        best = w if best is None else min(best, w)
    return best


def brute_force_bandwidth(g: Graph) -> int:
    from itertools import permutations
    best = None
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        w = max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)
        best = w if best is None else min(best, w)
    return best


def brute_force_pathwidth(g: Graph) -> int:
    """Smallest w such that some interval model of width w covers every edge.

    Tries all assignments of vertices to intervals over n positions; only
    usable for n <= 5.
    """
    n = g.n
    spans = [(a, b) for a in range(n) for b in range(a, n)]
    best = n - 1

    def rec(v, chosen):
        nonlocal best
        if v == n:
            width = max(sum(1 for a, b in chosen if a <= x <= b) for x in range(n)) - 1
            best = min(best, width)
            return
        for a, b in spans:
            ok = all(not (b < chosen[u][0] or chosen[u][1] < a) for u in g.adj[v] if u < v)
            if ok:
                rec(v + 1, chosen + [(a, b)])

    rec(0, [])
    return best


def naive_min_burned(g: Graph, source: int, b: int) -> int:
    """Plain set-based search over every protection set of size <= b, no pruning."""

    def go(burned: frozenset, protected: frozenset) -> int:
        threatened = {w for v in burned for w in g.adj[v]} - burned - protected
        if not threatened:
            return len(burned)
        free = [v for v in g.vertices if v not in burned and v not in protected]
        best = None
        for size in range(0, min(b, len(free)) + 1):
            for pick in combinations(free, size):
                p2 = protected | frozenset(pick)
                b2 = burned | frozenset(w for w in threatened if w not in p2)
                val = go(b2, p2)
                best = val if best is None else min(best, val)
        return best

    return go(frozenset([source]), frozenset())
