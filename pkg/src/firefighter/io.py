"""Text and JSON formats: edge lists, layouts, decompositions, DIMACS CNF,
strategies, traces and reduction labels."""
from __future__ import annotations

import json
import math
from typing import Any

from .bubbles import IsolationResult
from .gadgets import CubicMonotoneFormula, ReductionTree
from .graph import Graph, build_graph
from .layout import LinearLayout, PathDecomposition
from .propagation import StepRecord, Strategy, Trace


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _content_lines(text: str, comment: str = "#"):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith(comment):
            yield no, line


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError("missing header 'n <vertexCount>'", 1) from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError("malformed header, expected 'n <vertexCount>'", no)
    (n,) = _ints(parts[1:], no)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", no)
    edges = []
    seen = set()
    for no, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", no)
        u, v = _ints(parts, no)
        for w in (u, v):
            if not (0 <= w < n):
                raise ParseError(f"vertex id {w} out of range [0, {n})", no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", no)
        seen.add(key)
        edges.append((u, v))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def parse_layout(text: str, n: int | None = None) -> LinearLayout:
    order = []
    for no, line in _content_lines(text):
        order.extend(_ints(line.split(), no))
    if n is not None and sorted(order) != list(range(n)):
        raise ParseError(f"layout must list each of the {n} vertices exactly once")
    return LinearLayout(tuple(order))


def format_layout(layout: LinearLayout) -> str:
    return " ".join(map(str, layout.order)) + "\n"


def parse_decomposition(text: str) -> PathDecomposition:
    return PathDecomposition(tuple(frozenset(_ints(line.split(), no))
                                   for no, line in _content_lines(text)))


def format_decomposition(pd: PathDecomposition) -> str:
    return "".join(" ".join(map(str, sorted(b))) + "\n" for b in pd.bags)


def parse_dimacs_cnf(text: str) -> CubicMonotoneFormula:
    """Positive-literal DIMACS CNF. Cubic-ness is not checked here."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for no, line in _content_lines(text, comment="c"):
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed header, expected 'p cnf <vars> <clauses>'", no)
            header = tuple(_ints(parts[2:], no))
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", no)
        for lit in _ints(line.split(), no):
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif lit < 0:
                raise ParseError(f"negative literal {lit}: formula must be monotone", no)
            elif lit > header[0]:
                raise ParseError(f"variable {lit} exceeds declared count {header[0]}", no)
            else:
                current.append(lit - 1)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CubicMonotoneFormula(header[0], tuple(clauses))


def format_dimacs_cnf(f: CubicMonotoneFormula) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    lines += [" ".join(str(x + 1) for x in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def parse_assignment(text: str, n: int) -> tuple[bool, ...]:
    """Whitespace-separated DIMACS-style literals; listed positives are true."""
    tau = [False] * n
    for no, line in _content_lines(text, comment="c"):
        tokens = [t for t in line.split() if t != "v"]
        for lit in _ints(tokens, no):
            if abs(lit) > n:
                raise ParseError(f"variable {abs(lit)} exceeds {n}", no)
            if lit > 0:
                tau[lit - 1] = True
    return tuple(tau)


def strategy_to_json(s: Strategy) -> dict[str, Any]:
    return {"steps": [sorted(step) for step in s.steps]}


def strategy_from_json(data: dict[str, Any]) -> Strategy:
    if not isinstance(data, dict) or not isinstance(data.get("steps"), list):
        raise ParseError("strategy JSON must be an object with a 'steps' list")
    steps = []
    for i, step in enumerate(data["steps"]):
        if not isinstance(step, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                                 for v in step):
            raise ParseError(f"step {i + 1} must be a list of integer vertex ids")
        steps.append(frozenset(step))
    return Strategy(tuple(steps))


def parse_strategy(text: str) -> Strategy:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno) from None
    return strategy_from_json(data)


def trace_to_json(tr: Trace) -> dict[str, Any]:
    return {
        "burned": sorted(tr.burned),
        "protected": sorted(tr.protected),
        "saved": sorted(tr.saved),
        "stepCount": tr.step_count,
        "perStep": [{"protected": sorted(r.protected), "newlyBurned": sorted(r.newly_burned)}
                    for r in tr.per_step],
    }


def trace_from_json(data: dict[str, Any]) -> Trace:
    per_step = tuple(StepRecord(frozenset(r["protected"]), frozenset(r["newlyBurned"]))
                     for r in data["perStep"])
    if data["stepCount"] != len(per_step):
        raise ParseError("stepCount disagrees with perStep")
    burned = frozenset(data["burned"])
    sources = burned - frozenset().union(*(r.newly_burned for r in per_step))
    return Trace(sources, per_step, burned, frozenset(data["protected"]), frozenset(data["saved"]))


def labels_to_json(tree: ReductionTree) -> dict[str, Any]:
    """Roles and literal map; variables and clauses numbered from 1 as in DIMACS."""
    return {
        "source": tree.source,
        "k": tree.k,
        "roles": {str(v): r for v, r in enumerate(tree.roles)},
        "clauseMap": {str(v): {"variable": i + 1, "clause": j + 1, "negated": neg}
                      for v, (i, j, neg) in sorted(tree.clause_map.items())},
    }


def bound_value(x: int | float) -> int | str:
    return "saturated" if x == math.inf else int(x)


def isolation_to_json(res: IsolationResult) -> dict[str, Any]:
    return {
        "cutwidth": res.cutwidth,
        "bubbles": [{"sources": list(b.sources), "left": b.left, "right": b.right,
                     "radius": b.radius} for b in res.bubbles],
        "strategy": strategy_to_json(res.strategy),
        "trace": trace_to_json(res.trace),
        "burnedCount": len(res.trace.burned),
        "bound": bound_value(res.bound),
        "withinBound": res.within_bound,
        "confined": res.confined,
        "escaped": sorted(res.escaped),
    }


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()

