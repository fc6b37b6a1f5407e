"""Exact and heuristic firefighter solvers on small instances.

All searches share one state representation: the pair (burned, protected)
as vertex bitmasks. The future of the process depends on nothing else, so
it doubles as the memo key. Protecting an extra vertex never increases the
final burn count, so every search protects min(budget, #candidates)
vertices per step and only differs in which vertices are candidates:

* exhaustive_optimal: any vertex the fire can still reach,
* tree_optimal: only vertices adjacent to the fire,
* fpt_decide: reachable vertices within distance k of the source.

Candidate subsets are tried in lexicographic order of vertex ids and only a
strictly better value replaces the incumbent, which makes witnesses
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bubbles import bound_pw_delta
from .graph import Graph, k_neighborhood
from .layout import PATHWIDTH_CAP, SizeCapExceeded, exact_pathwidth
from .propagation import FireProcess, Instance, Strategy

EXHAUSTIVE_CAP = 10


@dataclass(frozen=True)
class SolveResult:
    min_burned: int
    witness: Strategy
    nodes_explored: int = 0


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: Strategy | None
    nodes_explored: int = 0

    def __bool__(self) -> bool:
        return self.answer


class NotATreeError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _Engine:
    def __init__(self, g: Graph):
        self.masks = g.nbr_masks
        self.n = g.n

    def nbr(self, mask: int) -> int:
        out = 0
        masks = self.masks
        while mask:
            low = mask & -mask
            out |= masks[low.bit_length() - 1]
            mask ^= low
        return out

    def threatened(self, burned: int, protected: int) -> int:
        return self.nbr(burned) & ~burned & ~protected

    def reachable(self, burned: int, protected: int) -> int:
        """Unburned vertices the fire can still reach around the protected ones."""
        region = burned
        frontier = burned
        while frontier:
            new = self.nbr(frontier) & ~region & ~protected
            region |= new
            frontier = new
        return region & ~burned


def _choices(cands: int, b: int):
    verts = _bits(cands)
    size = min(b, len(verts))
    for combo in combinations(verts, size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def _optimize(g: Graph, source: int, b: int, candidates) -> SolveResult:
    eng = _Engine(g)
    memo: dict[tuple[int, int], tuple[int, int]] = {}
    nodes = 0

    def value(burned: int, protected: int) -> int:
        nonlocal nodes
        key = (burned, protected)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        nodes += 1
        thr = eng.threatened(burned, protected)
        if not thr:
            memo[key] = (_popcount(burned), 0)
            return memo[key][0]
        best, best_choice = None, 0
        for choice in _choices(candidates(eng, burned, protected, thr), b):
            p2 = protected | choice
            v = value(burned | (thr & ~p2), p2)
            if best is None or v < best:
                best, best_choice = v, choice
        memo[key] = (best, best_choice)
        return best

    start = 1 << source
    total = value(start, 0)
    steps = []
    burned, protected = start, 0
    while True:
        thr = eng.threatened(burned, protected)
        if not thr:
            break
        choice = memo[(burned, protected)][1]
        steps.append(_bits(choice))
        protected |= choice
        burned |= thr & ~protected
    return SolveResult(total, Strategy(tuple(steps)), nodes)


def exhaustive_optimal(instance: Instance, cap: int = EXHAUSTIVE_CAP) -> SolveResult:
    """Minimum burn count over all strategies (ground-truth oracle)."""
    g = instance.graph
    if g.n > cap:
        raise SizeCapExceeded(f"exhaustive search limited to {cap} vertices, graph has {g.n}")
    return _optimize(g, instance.source, instance.budget,
                     lambda eng, burned, protected, thr: eng.reachable(burned, protected))


def tree_optimal(instance: Instance) -> SolveResult:
    """Optimum on a tree, protecting only vertices adjacent to the fire."""
    if not instance.graph.is_tree():
        raise NotATreeError("tree_optimal needs a tree")
    return _optimize(instance.graph, instance.source, instance.budget,
                     lambda eng, burned, protected, thr: thr)


def fpt_decide(instance: Instance, k: int | None = None) -> Decision:
    """Is there a strategy burning at most k vertices?

    When the budget covers the maximum degree the whole neighbourhood of the
    source is protected at once. Otherwise a bounded search: a run burning at
    most k vertices lasts at most k steps and never leaves the radius-k ball
    around the source, so branches that exceed either bound are cut and only
    vertices of that ball are ever protected.
    """
    k = instance.threshold if k is None else k
    if k is None or k < 1:
        raise ValueError("fpt_decide needs a threshold k >= 1")
    g, s, b = instance.graph, instance.source, instance.budget
    if b >= g.max_degree:
        first = g.adj[s]
        return Decision(True, Strategy((frozenset(first),) if first else ()), 0)

    eng = _Engine(g)
    ball = 0
    for v in k_neighborhood(g, s, k):
        ball |= 1 << v
    failed: set[tuple[int, int]] = set()
    nodes = 0
    path: list[list[int]] = []

    def search(burned: int, protected: int, depth: int) -> bool:
        nonlocal nodes
        nodes += 1
        thr = eng.threatened(burned, protected)
        if not thr:
            return True
        # every finished step burned a vertex, so depth < |burned| and this
        # cut is implied by the count cut below; kept as the explicit bound
        if depth >= k:
            return False
        if _popcount(burned) + max(0, _popcount(thr) - b) > k:
            return False
        key = (burned, protected & ball)
        if key in failed:
            return False
        cands = eng.reachable(burned, protected) & ball
        for choice in _choices(cands, b):
            p2 = protected | choice
            b2 = burned | (thr & ~p2)
            if _popcount(b2) > k:
                continue
            path.append(_bits(choice))
            if search(b2, p2, depth + 1):
                return True
            path.pop()
        failed.add(key)
        return False

    if search(1 << s, 0, 0):
        return Decision(True, Strategy(tuple(path)), nodes)
    return Decision(False, None, nodes)


def fpt_pw_delta(instance: Instance) -> SolveResult:
    """Smallest k' = 1, 2, ... for which fpt_decide says yes.

    The loop is capped by the vertex count and, when pathwidth is cheap to
    compute, by the burned-vertex bound for (pathwidth, max degree).
    """
    g = instance.graph
    cutoff = g.n
    if g.n <= PATHWIDTH_CAP:
        pw, _ = exact_pathwidth(g)
        cutoff = min(cutoff, bound_pw_delta(pw, g.max_degree, 1))
    nodes = 0
    for kp in range(1, int(cutoff) + 1):
        d = fpt_decide(instance, kp)
        nodes += d.nodes_explored
        if d.answer:
            return SolveResult(kp, d.witness, nodes)
    raise AssertionError(f"no strategy found within cutoff {cutoff}")


def _reach_size(g: Graph, burned: set[int], protected: set[int]) -> int:
    seen = set(burned)
    stack = list(burned)
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen and w not in protected:
                seen.add(w)
                stack.append(w)
    return len(seen)


def greedy_baseline(instance: Instance) -> SolveResult:
    """Each step protect the threatened vertices that cut off the most vertices."""
    g, b = instance.graph, instance.budget
    proc = FireProcess(g, [instance.source])
    steps = []
    while proc.active:
        chosen: set[int] = set()
        for _ in range(b):
            thr = sorted(proc.threatened() - chosen)
            if not thr:
                break
            blocked = proc.protected | chosen
            base = _reach_size(g, proc.burned, blocked)
            best = max(thr, key=lambda v: (base - _reach_size(g, proc.burned, blocked | {v}), -v))
            chosen.add(best)
        steps.append(frozenset(chosen))
        proc.step(chosen, b)
    trace = proc.trace()
    return SolveResult(len(trace.burned), Strategy(tuple(steps)), 0)
