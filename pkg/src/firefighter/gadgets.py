"""Firefighter trees built from Cubic Monotone 1-in-3-SAT formulas.

Variables and clauses are 0-based here (DIMACS files are 1-based and get
shifted on parsing). An assignment is a tuple of booleans, one per variable.

Tree layout for n variables and budget 1:

* a spine path of 2n - 1 vertices starting at the source; the two vertices
  of variable i (positive and negated) hang from spine vertex 2i;
* each variable vertex carries a guard and a descent path of 2(n - 1 - i)
  edges ending in three literal leaves, one per clause occurrence
  (occurrences in increasing clause order);
* below the literal for clause j sits a stem of 3j edges. A positive stem
  ends in a guard. A negated stem ends in a dummy leaf plus a short blocker
  path of two vertices followed by a guard.

A guard is a star with k leaves whose centre is attached to the tree. For
budget b >= 2 a tail path of 5n extra vertices hangs from the source, with
b - 1 guards on every tail vertex including the source, and the threshold
grows by those 5n vertices.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .graph import Graph, build_graph, relabeled_subgraph
from .layout import PathDecomposition, tree_path_decomposition
from .propagation import Strategy

SPINE = "spine"
VAR_POS = "var_pos"
VAR_NEG = "var_neg"
GUARD_CENTER = "guard_center"
GUARD_LEAF = "guard_leaf"
PATH_INTERNAL = "path_internal"
LITERAL = "literal"
CLAUSE_PATH_INTERNAL = "clause_path_internal"
DUMMY = "dummy"
TAIL = "tail"

ROLES = (SPINE, VAR_POS, VAR_NEG, GUARD_CENTER, GUARD_LEAF, PATH_INTERNAL,
         LITERAL, CLAUSE_PATH_INTERNAL, DUMMY, TAIL)


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class CubicMonotoneFormula:
    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(int(x) for x in c) for c in self.clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self, i: int) -> list[int]:
        """Clause indices containing variable i, increasing, with repeats."""
        return [j for j, c in enumerate(self.clauses) for x in c if x == i]


@dataclass(frozen=True)
class ExtendedFormula:
    base: CubicMonotoneFormula
    complement_clauses: tuple[tuple[int, ...], ...]


def cubic_monotone_violation(f: CubicMonotoneFormula) -> str | None:
    if f.n < 1:
        return "formula needs at least one variable"
    for j, c in enumerate(f.clauses):
        if len(c) != 3:
            return f"clause {j} has {len(c)} literals, expected 3"
        if len(set(c)) != 3:
            return f"clause {j} repeats a variable"
        for x in c:
            if not (0 <= x < f.n):
                return f"clause {j} mentions unknown variable {x}"
    counts = [0] * f.n
    for c in f.clauses:
        for x in c:
            counts[x] += 1
    for i, cnt in enumerate(counts):
        if cnt != 3:
            return f"variable {i} occurs {cnt} times, expected 3"
    return None


def validate_cubic_monotone(f: CubicMonotoneFormula) -> None:
    problem = cubic_monotone_violation(f)
    if problem is not None:
        raise FormulaError(problem)


def extend_formula(f: CubicMonotoneFormula) -> ExtendedFormula:
    """Append, for every clause, the clause of the negations of its variables."""
    return ExtendedFormula(f, tuple(tuple(c) for c in f.clauses))


def is_one_in_three(f: CubicMonotoneFormula, tau: Sequence[bool]) -> bool:
    return all(sum(bool(tau[x]) for x in c) == 1 for c in f.clauses)


def is_satisfying(ext: ExtendedFormula, tau: Sequence[bool]) -> bool:
    """Exactly one true literal per original clause, two per negated clause."""
    if len(tau) != ext.base.n:
        return False
    if not all(sum(bool(tau[x]) for x in c) == 1 for c in ext.base.clauses):
        return False
    return all(sum(not tau[x] for x in c) == 2 for c in ext.complement_clauses)


def all_1in3_solutions(f: CubicMonotoneFormula) -> Iterator[tuple[bool, ...]]:
    for tau in product((False, True), repeat=f.n):
        if is_one_in_three(f, tau):
            yield tau


def solve_1in3(f: CubicMonotoneFormula) -> tuple[bool, ...] | None:
    """Brute force over all 2^n assignments; first hit in lexicographic order."""
    return next(all_1in3_solutions(f), None)


def random_cubic_monotone(n: int, rng: random.Random, attempts: int = 10_000) -> CubicMonotoneFormula:
    """Uniform-ish random formula: shuffle three copies of each variable into triples."""
    slots = [i for i in range(n) for _ in range(3)]
    for _ in range(attempts):
        rng.shuffle(slots)
        clauses = [tuple(sorted(slots[3 * j:3 * j + 3])) for j in range(n)]
        if all(len(set(c)) == 3 for c in clauses):
            return CubicMonotoneFormula(n, tuple(clauses))
    raise FormulaError(f"no cubic monotone formula found for n={n}")


def reduction_k(n: int, budget: int = 1) -> int:
    p = 2 * n - 1
    k = p + n * (11 * n + 7) // 2
    return k if budget == 1 else k + 5 * n


@dataclass(frozen=True)
class BurnProfile:
    phase1: int
    per_clause: tuple[int, ...]
    total: int


def expected_burn_profile(n: int) -> BurnProfile:
    p = 2 * n - 1
    phase1 = p + 3 * n + n * n
    per_clause = tuple(9 * (n - j + 1) - 4 for j in range(1, n + 1))
    return BurnProfile(phase1, per_clause, phase1 + sum(per_clause))


@dataclass(frozen=True)
class ReductionTree:
    graph: Graph
    source: int
    k: int
    budget: int
    formula: CubicMonotoneFormula
    roles: tuple[str, ...]
    clause_map: dict = field(repr=False)        # literal vertex -> (variable, clause, negated)
    spine: tuple[int, ...] = field(repr=False)
    var_vertex: tuple[tuple[int, int], ...] = field(repr=False)   # (positive, negated)
    var_guard: tuple[tuple[int, int], ...] = field(repr=False)    # guard centres (g, ~g)
    literal: dict = field(repr=False)           # (negated, variable, occurrence) -> vertex
    clause_guard: dict = field(repr=False)      # (negated, variable, clause) -> guard centre
    dummy: dict = field(repr=False)             # (variable, clause) -> vertex
    blocker_path: dict = field(repr=False)      # (variable, clause) -> (a, b, guard centre)
    tail: tuple[int, ...] = field(repr=False, default=())
    tail_guards: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def p(self) -> int:
        return len(self.spine)

    @property
    def guard_centers(self) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r == GUARD_CENTER]


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str, parent: int | None = None) -> int:
        v = len(self.roles)
        self.roles.append(role)
        if parent is not None:
            self.edges.append((parent, v))
        return v

    def path(self, start: int, length: int, role: str) -> int:
        """Hang `length` new vertices below `start`; returns the far end."""
        end = start
        for _ in range(length):
            end = self.add(role, end)
        return end


def build_reduction(f: CubicMonotoneFormula, budget: int = 1) -> ReductionTree:
    validate_cubic_monotone(f)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    n = f.n
    p = 2 * n - 1
    k = reduction_k(n, budget)
    bld = _Builder()

    spine = [bld.add(SPINE)]
    for _ in range(p - 1):
        spine.append(bld.add(SPINE, spine[-1]))

    var_vertex, literal, clause_map = [], {}, {}
    for i in range(n):
        attach = spine[2 * i]
        pair = []
        for negated in (False, True):
            v = bld.add(VAR_NEG if negated else VAR_POS, attach)
            end = bld.path(v, 2 * (n - 1 - i), PATH_INTERNAL)
            for r, j in enumerate(f.occurrences(i)):
                lit = bld.add(LITERAL, end)
                literal[(negated, i, r)] = lit
                clause_map[lit] = (i, j, negated)
            pair.append(v)
        var_vertex.append(tuple(pair))

    stem_end, dummy, blocker_inner = {}, {}, {}
    for i in range(n):
        for r, j in enumerate(f.occurrences(i)):
            for negated in (False, True):
                q = bld.path(literal[(negated, i, r)], 3 * j, PATH_INTERNAL)
                stem_end[(negated, i, j)] = q
                if negated:
                    dummy[(i, j)] = bld.add(DUMMY, q)
                    a = bld.add(CLAUSE_PATH_INTERNAL, q)
                    blocker_inner[(i, j)] = (a, bld.add(CLAUSE_PATH_INTERNAL, a))

    def guard(parent: int) -> int:
        centre = bld.add(GUARD_CENTER, parent)
        for _ in range(k):
            bld.add(GUARD_LEAF, centre)
        return centre

    var_guard = [(guard(vp), guard(vn)) for vp, vn in var_vertex]
    clause_guard, blocker_path = {}, {}
    for i in range(n):
        for j in f.occurrences(i):
            clause_guard[(False, i, j)] = guard(stem_end[(False, i, j)])
            a, b = blocker_inner[(i, j)]
            centre = guard(b)
            clause_guard[(True, i, j)] = centre
            blocker_path[(i, j)] = (a, b, centre)

    tail, tail_guards = [], []
    if budget >= 2:
        tail = [spine[0]]
        for _ in range(5 * n):
            tail.append(bld.add(TAIL, tail[-1]))
        tail_guards = [tuple(guard(w) for _ in range(budget - 1)) for w in tail]

    g = build_graph(len(bld.roles), bld.edges)
    return ReductionTree(
        graph=g, source=spine[0], k=k, budget=budget, formula=f, roles=tuple(bld.roles),
        clause_map=clause_map, spine=tuple(spine), var_vertex=tuple(var_vertex),
        var_guard=tuple(var_guard), literal=literal, clause_guard=clause_guard,
        dummy=dummy, blocker_path=blocker_path, tail=tuple(tail), tail_guards=tuple(tail_guards),
    )


def strategy_from_assignment(tree: ReductionTree, tau: Sequence[bool]) -> Strategy:
    """The strategy read off a satisfying assignment.

    Variable phase (steps 1 .. p + 1): protect the variable vertex of the
    false literal, then the guard of the burning one. Clause phase (three
    steps per clause): protect the guard behind the true positive literal,
    then, one per step, the front vertex of the two negated-literal paths.
    With budget b >= 2 the b - 1 guards of the w-path vertex reached by the
    fire are added to every step.
    """
    f = tree.formula
    tau = tuple(bool(x) for x in tau)
    if not is_satisfying(extend_formula(f), tau):
        raise FormulaError("assignment does not satisfy the extended formula")
    free: list[list[int]] = []
    for i in range(f.n):
        v_pos, v_neg = tree.var_vertex[i]
        g_pos, g_neg = tree.var_guard[i]
        free.append([v_neg] if tau[i] else [v_pos])
        free.append([g_pos] if tau[i] else [g_neg])
    for j, clause in enumerate(f.clauses):
        true_var = next(x for x in clause if tau[x])
        false_vars = sorted(x for x in clause if not tau[x])
        free.append([tree.clause_guard[(False, true_var, j)]])
        # the fire reaches b on the first of these steps and the guard on the second
        free.append([tree.blocker_path[(false_vars[0], j)][1]])
        free.append([tree.blocker_path[(false_vars[1], j)][2]])
    steps = [set(s) for s in free]
    for t, guards in enumerate(tree.tail_guards):
        if t == len(steps):
            steps.append(set())
        steps[t].update(guards)
    return Strategy(tuple(frozenset(s) for s in steps))


def _hanging(g: Graph, root: int, block: int) -> set[int]:
    """Vertices reachable from `root` without passing through `block`."""
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y != block and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def variable_subtree(tree: ReductionTree, i: int, negated: bool) -> tuple[Graph, PathDecomposition]:
    """Subtree below one variable vertex, renumbered, with its decomposition."""
    root = tree.var_vertex[i][1 if negated else 0]
    verts = _hanging(tree.graph, root, tree.spine[2 * i])
    sub, old = relabeled_subgraph(tree.graph, verts)
    new = {v: idx for idx, v in enumerate(old)}
    pd = tree_path_decomposition(tree.graph, root, verts)
    return sub, PathDecomposition(tuple(frozenset(new[v] for v in b) for b in pd.bags))


def path_decomposition_pw3(tree: ReductionTree) -> PathDecomposition:
    """Width-3 decomposition: variable subtrees plus their spine vertex, glued by spine bags."""
    g, u, n = tree.graph, tree.spine, tree.formula.n
    bags: list[frozenset[int]] = []
    if tree.tail:
        w_side = {tree.source}
        for w in tree.tail[1:2]:
            w_side |= _hanging(g, w, tree.source)
        for guards in tree.tail_guards[0]:
            w_side |= _hanging(g, guards, tree.source)
        w_bags = tree_path_decomposition(g, tree.source, w_side).bags
        # s must sit at the end so it stays contiguous with the spine bags
        bags.extend(reversed(w_bags))
    for i in range(n):
        hub = u[2 * i]
        for root in tree.var_vertex[i]:
            sub = _hanging(g, root, hub)
            bags.extend(b | {hub} for b in tree_path_decomposition(g, root, sub).bags)
        if i < n - 1:
            bags.append(frozenset({u[2 * i], u[2 * i + 1], u[2 * i + 2]}))
    return PathDecomposition(tuple(bags))
