"""Undirected simple graphs with integer vertex ids."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, used by the search code."""
        return tuple(sum(1 << u for u in a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexRangeError(f"vertex {v} out of range for graph on {self.n} vertices")

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(k_neighborhood(self, 0, self.n)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        u, v = int(u), int(v)
        for w in (u, v):
            if not (0 <= w < n):
                raise VertexRangeError(f"edge ({u}, {v}): vertex {w} out of range [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))


def relabeled_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on `keep`, renumbered 0..len-1 in increasing id order.

    Returns the subgraph and the list mapping new ids back to old ones.
    """
    old = sorted(set(keep))
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[v]) for u, v in g.edges if u in new and v in new]
    return build_graph(len(old), edges), old


def k_neighborhood(g: Graph, v: int, k: int) -> frozenset[int]:
    """All vertices at distance at most `k` from `v`, `v` included."""
    g.check_vertex(v)
    if k < 0:
        raise ValueError("k must be nonnegative")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == k:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return frozenset(dist)


def distances(g: Graph, v: int) -> dict[int, int]:
    """BFS distances from `v` to every reachable vertex."""
    g.check_vertex(v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# Small named graphs, handy in tests and examples.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
