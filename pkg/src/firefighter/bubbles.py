"""Bubbles over a linear layout and the isolation strategy built on them.

A bubble of radius i around a fire source is the stretch of the layout
between the leftmost and rightmost positions reached by the radius-i ball
around the source. Its boundary is crossed by at most 2 * cutwidth edges, so
protecting one outside endpoint per step seals it before the fire, which
needs more than 2 * cutwidth steps to leave, gets out.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, build_graph
from .layout import LinearLayout, cutwidth_of_layout
from .propagation import FireProcess, Strategy, Trace

# bounds above 2**SATURATION_BITS are reported as math.inf
SATURATION_BITS = 1 << 16


@dataclass(frozen=True)
class Bubble:
    sources: tuple[int, ...]
    left: int
    right: int
    radius: int

    @property
    def source(self) -> int:
        return self.sources[0]

    def contains(self, pos: int) -> bool:
        return self.left <= pos <= self.right

    def vertices(self, layout: LinearLayout) -> frozenset[int]:
        return frozenset(layout.order[self.left:self.right + 1])


def _ball(g: Graph, s: int, radius: int, region: set[int] | None = None) -> set[int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.adj[u]:
            if w not in dist and (region is None or w in region):
                dist[w] = dist[u] + 1
                queue.append(w)
    return set(dist)


def bubble(g: Graph, layout: LinearLayout, s: int, i: int,
           region: set[int] | None = None) -> Bubble:
    """Bubble of radius i around s; positions index into `layout`.

    With `region` given, distances are measured inside that vertex set and
    `layout` is expected to be the layout restricted to it.
    """
    if i < 0:
        raise ValueError("bubble radius must be nonnegative")
    g.check_vertex(s)
    pos = layout.position
    spots = [pos[v] for v in _ball(g, s, i, region)]
    return Bubble((s,), min(spots), max(spots), i)


def _overlap(a: Bubble, b: Bubble, g: Graph, layout: LinearLayout) -> bool:
    if a.left <= b.right and b.left <= a.right:
        return True
    pos = layout.position
    for u in layout.order[a.left:a.right + 1]:
        for w in g.adj[u]:
            if w in pos and b.contains(pos[w]):
                return True
    return False


def merge_overlapping(bubbles: Iterable[Bubble], g: Graph, layout: LinearLayout) -> list[Bubble]:
    """Merge bubbles sharing a position or joined by an edge, to a fixed point.

    A merged bubble spans the hull of its parts, sorted by left endpoint.
    """
    out = sorted(bubbles, key=lambda b: (b.left, b.right))
    merged = True
    while merged:
        merged = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                a, b = out[i], out[j]
                if _overlap(a, b, g, layout):
                    out[i] = Bubble(tuple(sorted(set(a.sources) | set(b.sources))),
                                    min(a.left, b.left), max(a.right, b.right),
                                    max(a.radius, b.radius))
                    del out[j]
                    merged = True
                    break
            if merged:
                break
        out.sort(key=lambda b: (b.left, b.right))
    return out


def burned_upper_bound(cw: int, fires: int) -> int | float:
    """Recursive burn bound: B(0, f) = f, B(c, f) = f * (2c) ** (2c + B(c - 1, f)).

    Saturates to math.inf once the value would need more than
    SATURATION_BITS bits.
    """
    if cw < 0 or fires < 0:
        raise ValueError("cutwidth and source count must be nonnegative")
    value: int | float = fires
    for c in range(1, cw + 1):
        if value == math.inf:
            return math.inf
        exponent = 2 * c + value
        if exponent * math.log2(2 * c) + math.log2(max(fires, 1)) > SATURATION_BITS:
            return math.inf
        value = fires * (2 * c) ** exponent
    return value


def bound_pw_delta(pw: int, max_degree: int, fires: int) -> int | float:
    return burned_upper_bound(pw * max_degree, fires)


def bound_bandwidth(bw: int, fires: int) -> int | float:
    return burned_upper_bound(bw * (bw + 1) // 2, fires)


@dataclass(frozen=True)
class IsolationResult:
    strategy: Strategy
    trace: Trace
    cutwidth: int
    bubbles: tuple[Bubble, ...]
    bound: int | float
    layout: LinearLayout

    @property
    def escaped(self) -> frozenset[int]:
        """Burned vertices outside every initial merged bubble."""
        pos = self.layout.position
        return frozenset(v for v in self.trace.burned
                         if not any(b.contains(pos[v]) for b in self.bubbles))

    @property
    def confined(self) -> bool:
        return not self.escaped

    @property
    def within_bound(self) -> bool:
        return len(self.trace.burned) <= self.bound


def _region_cutwidth(edges: list[tuple[int, int]], order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    diff = [0] * (len(order) + 1)
    for u, v in edges:
        a, b = sorted((pos[u], pos[v]))
        diff[a] += 1
        diff[b] -= 1
    best = running = 0
    for i in range(len(order) - 1):
        running += diff[i]
        best = max(best, running)
    return best


def isolation_strategy(g: Graph, layout: LinearLayout, sources: Iterable[int],
                       budgets: Sequence[int] = (1,)) -> IsolationResult:
    """Seal bubbles one at a time, then recurse inside each sealed bubble.

    For a region with cutwidth c (edges between two burned vertices are
    dropped, they can no longer matter) every burned vertex gets a bubble of
    radius 2c; overlapping bubbles are merged and handled by increasing left
    endpoint. Each bubble gets 2c steps in which the outside endpoints of
    its boundary edges are protected, most boundary edges first, ties by
    vertex id; then the same procedure runs on the bubble alone.
    """
    layout.check(g)
    budgets = list(budgets)
    if not budgets or min(budgets) < 1:
        raise ValueError("isolation needs at least one firefighter per step")
    sources = sorted(set(sources))
    proc = FireProcess(g, sources)
    steps: list[frozenset[int]] = []

    def budget_now() -> int:
        t = proc.t + 1
        return budgets[t - 1] if t <= len(budgets) else budgets[-1]

    def region_graph(region: set[int]) -> tuple[Graph, LinearLayout]:
        burned = proc.burned
        edges = [(u, v) for u, v in g.edges
                 if u in region and v in region and not (u in burned and v in burned)]
        return build_graph(g.n, edges), layout.restrict(region)

    def region_active(h: Graph, region: set[int]) -> bool:
        return any(w not in proc.burned and w not in proc.protected
                   for v in proc.burned & region for w in h.adj[v])

    def isolate(region: set[int]) -> None:
        h, sub = region_graph(region)
        c = _region_cutwidth(list(h.edges), sub.order)
        if c == 0 or not region_active(h, region):
            return
        radius = 2 * c
        fire = sorted(proc.burned & region)
        pieces = [bubble(h, sub, s, radius, region) for s in fire]
        for bub in merge_overlapping(pieces, h, sub):
            inside = set(bub.vertices(sub))
            for _ in range(radius):
                if not proc.active:
                    return
                if not region_active(h, inside):
                    break
                hits: dict[int, int] = {}
                for v in inside:
                    for w in h.adj[v]:
                        if w in region and w not in inside and w not in proc.burned \
                                and w not in proc.protected:
                            hits[w] = hits.get(w, 0) + 1
                picks = sorted(hits, key=lambda w: (-hits[w], w))[:budget_now()]
                steps.append(frozenset(picks))
                proc.step(picks, budget_now())
            isolate(inside)

    everything = set(g.vertices)
    cw = cutwidth_of_layout(g, layout)
    top = tuple(merge_overlapping([bubble(g, layout, s, 2 * cw) for s in sources], g, layout))
    while proc.active:
        before = proc.t
        isolate(everything)
        if proc.t == before:
            raise RuntimeError("isolation made no progress on an active fire")
    return IsolationResult(Strategy(tuple(steps)), proc.trace(), cw, top,
                           burned_upper_bound(cw, len(sources)), layout)

