"""Linear layouts, path decompositions and the three width measures.

Exact widths are only meant for small graphs. Cutwidth and pathwidth use a
dynamic program over layout prefixes (the cost of a prefix only depends on
its vertex set); bandwidth uses a depth-first placement search with a
sliding-window memo. Every exact routine returns a certificate that the
matching evaluator re-checks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, VertexRangeError

CUTWIDTH_CAP = 12
BANDWIDTH_CAP = 12
PATHWIDTH_CAP = 16


class SizeCapExceeded(ValueError):
    """Raised when an exact search is asked to run on too large an input."""


class LayoutError(ValueError):
    pass


class PathDecompositionError(ValueError):
    def __init__(self, condition: int, witness, message: str):
        super().__init__(f"condition {condition} violated: {message}")
        self.condition = condition
        self.witness = witness


@dataclass(frozen=True)
class LinearLayout:
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def distance(self, u: int, v: int) -> int:
        return abs(self.position[u] - self.position[v])

    def check(self, g: Graph) -> None:
        if len(self.order) != g.n or sorted(self.order) != list(range(g.n)):
            raise LayoutError(f"layout is not a permutation of the {g.n} vertices of the graph")

    def restrict(self, keep: Iterable[int]) -> LinearLayout:
        keep = set(keep)
        return LinearLayout(tuple(v for v in self.order if v in keep))


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(int(v) for v in b) for b in self.bags))

    @property
    def width(self) -> int:
        return max((len(b) - 1 for b in self.bags), default=0)


def _gap_cuts(g: Graph, layout: LinearLayout) -> list[int]:
    pos = layout.position
    diff = [0] * (g.n + 1)
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        diff[a] += 1
        diff[b] -= 1
    cuts, running = [], 0
    for i in range(g.n - 1):
        running += diff[i]
        cuts.append(running)
    return cuts


def cutwidth_of_layout(g: Graph, layout: LinearLayout) -> int:
    layout.check(g)
    return max(_gap_cuts(g, layout), default=0)


def bandwidth_of_layout(g: Graph, layout: LinearLayout) -> int:
    layout.check(g)
    return max((layout.distance(u, v) for u, v in g.edges), default=0)


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> int:
    """Check the three path-decomposition conditions and return the width.

    Raises PathDecompositionError naming the first failing condition with a
    witness vertex (conditions 1 and 3) or edge (condition 2).
    """
    for bag in pd.bags:
        for v in bag:
            if not (0 <= v < g.n):
                raise VertexRangeError(f"bag vertex {v} out of range")
    covered = set().union(*pd.bags) if pd.bags else set()
    for v in g.vertices:
        if v not in covered:
            raise PathDecompositionError(1, v, f"vertex {v} is in no bag")
    where: dict[int, set[int]] = {}
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            where.setdefault(v, set()).add(i)
            first.setdefault(v, i)
            last[v] = i
    for u, v in g.edges:
        if where[u].isdisjoint(where[v]):
            raise PathDecompositionError(2, (u, v), f"edge ({u}, {v}) is in no bag")
    for v in sorted(first):
        for i in range(first[v], last[v] + 1):
            if v not in pd.bags[i]:
                raise PathDecompositionError(
                    3, v, f"vertex {v} occurs in bags {first[v]} and {last[v]} but not in bag {i}")
    return pd.width


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise SizeCapExceeded(f"exact {what} limited to {cap} vertices, graph has {g.n}")


def _prefix_dp(n: int, cost: list[int]) -> tuple[int, tuple[int, ...]]:
    """min over orderings of max(cost[prefix]) for all prefixes of size 1..n.

    Returns the optimum and a lexicographically-first witness ordering.
    """
    full = (1 << n) - 1
    best = [0] * (1 << n)
    for s in range(1, full + 1):
        m = None
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            val = best[s ^ low]
            if m is None or val < m:
                m = val
        best[s] = max(m, cost[s])
    order = []
    s = full
    while s:
        for v in range(n):
            bit = 1 << v
            if s & bit and max(best[s ^ bit], cost[s]) == best[s]:
                order.append(v)
                s ^= bit
                break
    order.reverse()
    return best[full], tuple(order)


def exact_cutwidth(g: Graph, cap: int = CUTWIDTH_CAP) -> tuple[int, LinearLayout]:
    _check_cap(g, cap, "cutwidth")
    n = g.n
    if n == 0:
        return 0, LinearLayout(())
    masks = g.nbr_masks
    cut = [0] * (1 << n)
    for s in range(1, 1 << n):
        v = (s & -s).bit_length() - 1
        prev = s ^ (1 << v)
        cut[s] = cut[prev] + g.degree(v) - 2 * bin(masks[v] & prev).count("1")
    width, order = _prefix_dp(n, cut)
    return width, LinearLayout(order)


def exact_pathwidth(g: Graph, cap: int = PATHWIDTH_CAP) -> tuple[int, PathDecomposition]:
    """Pathwidth via vertex separation: the ordering is the bag-introduction order."""
    _check_cap(g, cap, "pathwidth")
    n = g.n
    if n == 0:
        return 0, PathDecomposition(())
    masks = g.nbr_masks
    full = (1 << n) - 1
    boundary = [0] * (1 << n)
    for s in range(1, 1 << n):
        comp = full ^ s
        count = 0
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if masks[low.bit_length() - 1] & comp:
                count += 1
        boundary[s] = count
    width, order = _vertex_separation(n, boundary)
    pd = decomposition_from_order(g, order)
    return width, pd


def _vertex_separation(n: int, boundary: list[int]) -> tuple[int, tuple[int, ...]]:
    full = (1 << n) - 1
    # best[S] = min over orderings of S of the max boundary over proper prefixes
    best = [0] * (1 << n)
    for s in range(1, full + 1):
        m = None
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            prev = s ^ low
            val = max(best[prev], boundary[prev])
            if m is None or val < m:
                m = val
        best[s] = m
    order = []
    s = full
    while s:
        for v in range(n):
            bit = 1 << v
            if s & bit and max(best[s ^ bit], boundary[s ^ bit]) == best[s]:
                order.append(v)
                s ^= bit
                break
    order.reverse()
    return best[full], tuple(order)


def decomposition_from_order(g: Graph, order: Sequence[int]) -> PathDecomposition:
    """Bag i = {order[i]} plus every earlier vertex with a neighbour at or after i."""
    pos = {v: i for i, v in enumerate(order)}
    last_nbr = {v: max((pos[u] for u in g.adj[v]), default=-1) for v in order}
    bags = []
    for i, v in enumerate(order):
        bag = {v}
        bag.update(u for u in order[:i] if last_nbr[u] >= i)
        bags.append(frozenset(bag))
    return PathDecomposition(tuple(bags))


def exact_bandwidth(g: Graph, cap: int = BANDWIDTH_CAP) -> tuple[int, LinearLayout]:
    _check_cap(g, cap, "bandwidth")
    n = g.n
    if not g.edges:
        return 0, LinearLayout(tuple(range(n)))
    lower = max(1, (g.max_degree + 1) // 2)
    for k in range(lower, n):
        order = _bandwidth_layout(g, k)
        if order is not None:
            return k, LinearLayout(order)
    raise AssertionError("unreachable: bandwidth n-1 always feasible")


def _bandwidth_layout(g: Graph, k: int) -> tuple[int, ...] | None:
    n = g.n
    masks = g.nbr_masks
    full = (1 << n) - 1
    failed: set[tuple[int, tuple[int, ...]]] = set()
    order: list[int] = []

    def feasible_window(placed: int) -> bool:
        # vertex at position q must see all of its neighbours by position q + k
        p = len(order)
        for q in range(max(0, p - k), p):
            u = order[q]
            pending = bin(masks[u] & ~placed & full).count("1")
            if pending > q + k - p + 1:
                return False
        return True

    def dfs(placed: int) -> bool:
        p = len(order)
        if p == n:
            return True
        key = (placed, tuple(order[max(0, p - k):]))
        if key in failed:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            # the vertex leaving the window must have no unplaced neighbours left
            if p - k >= 0 and masks[order[p - k]] & ~(placed | 1 << v) & full:
                continue
            order.append(v)
            if feasible_window(placed | 1 << v) and dfs(placed | 1 << v):
                return True
            order.pop()
        failed.add(key)
        return False

    return tuple(order) if dfs(0) else None


def tree_path_decomposition(g: Graph, root: int, allowed: Iterable[int] | None = None) -> PathDecomposition:
    """Decomposition of the tree (or subtree on `allowed`) hanging from `root`.

    Follows a spine that always descends into the child of largest recursive
    width; subtrees hanging off the spine are decomposed recursively and get
    their spine vertex added to every bag.
    """
    allowed_set = set(g.vertices) if allowed is None else set(allowed)
    parent = {root: -1}
    bfs = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in allowed_set and y not in parent:
                parent[y] = x
                bfs.append(y)
                queue.append(y)
    children = {x: [y for y in g.adj[x] if parent.get(y) == x and y != parent[x]] for x in bfs}
    width: dict[int, int] = {}
    for x in reversed(bfs):
        ws = sorted((width[c] for c in children[x]), reverse=True)
        if not ws:
            width[x] = 0
        else:
            width[x] = max(1, ws[0], ws[1] + 1 if len(ws) > 1 else 0)

    def heavy(x: int) -> int:
        return min(children[x], key=lambda c: (-width[c], c))

    def decompose(top: int) -> list[frozenset[int]]:
        spine = [top]
        while children[spine[-1]]:
            spine.append(heavy(spine[-1]))
        if len(spine) == 1:
            return [frozenset({top})]
        bags: list[frozenset[int]] = []
        for idx, x in enumerate(spine):
            nxt = spine[idx + 1] if idx + 1 < len(spine) else None
            for c in children[x]:
                if c != nxt:
                    bags.extend(b | {x} for b in decompose(c))
            if nxt is not None:
                bags.append(frozenset({x, nxt}))
        return bags

    return PathDecomposition(tuple(decompose(root)))
