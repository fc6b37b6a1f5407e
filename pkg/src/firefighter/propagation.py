"""The burn/protect process.

A step t >= 1 is a protection phase followed by a spreading phase. The
process keeps running while some unburned, unprotected vertex touches the
fire; a step whose protections cut off every threatened vertex is the last
one. With that rule a run never has more steps than burned vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class Instance:
    graph: Graph
    source: int
    budget: int
    threshold: int | None = None

    def __post_init__(self):
        self.graph.check_vertex(self.source)
        if self.budget < 1:
            raise ValueError("budget must be a positive integer")
        if self.threshold is not None and self.threshold < 1:
            raise ValueError("threshold k must be a positive integer")


@dataclass(frozen=True)
class Strategy:
    steps: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(frozenset(int(v) for v in s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def protected(self) -> frozenset[int]:
        return frozenset().union(*self.steps)


@dataclass(frozen=True)
class StepRecord:
    protected: frozenset[int]
    newly_burned: frozenset[int]


@dataclass(frozen=True)
class Trace:
    sources: frozenset[int]
    per_step: tuple[StepRecord, ...]
    burned: frozenset[int]
    protected: frozenset[int]
    saved: frozenset[int]

    @property
    def step_count(self) -> int:
        return len(self.per_step)

    def burned_after(self, t: int) -> frozenset[int]:
        """Burned set at the end of step t (t = 0 gives the sources)."""
        out = set(self.sources)
        for rec in self.per_step[:t]:
            out |= rec.newly_burned
        return frozenset(out)


@dataclass(frozen=True)
class Violation:
    step: int
    kind: str
    vertex: int | None = None

    def __str__(self) -> str:
        what = {
            "out_of_range": "vertex out of range",
            "protect_burned": "protecting a burned vertex",
            "protect_protected": "protecting an already-protected vertex",
            "budget_exceeded": "budget exceeded",
            "leftover": "strategy continues after the fire stopped",
        }[self.kind]
        at = f" (vertex {self.vertex})" if self.vertex is not None else ""
        return f"step {self.step}: {what}{at}"


class StrategyError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass
class StepAudit:
    """Counts finished runs and runs with more steps than burned vertices."""
    runs: int = 0
    violations: list = field(default_factory=list)

    def record(self, trace: Trace) -> None:
        self.runs += 1
        if trace.step_count > len(trace.burned):
            self.violations.append((trace.step_count, len(trace.burned)))


STEP_AUDIT = StepAudit()


class FireProcess:
    """Stateful stepping of the process, for callers that pick protections online."""

    def __init__(self, graph: Graph, sources: Iterable[int]):
        sources = frozenset(sources)
        if not sources:
            raise ValueError("at least one fire source is required")
        for s in sources:
            graph.check_vertex(s)
        self.graph = graph
        self.sources = sources
        self.burned: set[int] = set(sources)
        self.protected: set[int] = set()
        self.front: set[int] = set(sources)
        self.records: list[StepRecord] = []

    @property
    def t(self) -> int:
        """Number of completed steps."""
        return len(self.records)

    def threatened(self) -> set[int]:
        adj = self.graph.adj
        out = set()
        for v in self.front:
            for w in adj[v]:
                if w not in self.burned and w not in self.protected:
                    out.add(w)
        return out

    @property
    def active(self) -> bool:
        adj = self.graph.adj
        return any(w not in self.burned and w not in self.protected
                   for v in self.front for w in adj[v])

    def check(self, protect: Iterable[int], budget: int | None) -> Violation | None:
        step = self.t + 1
        protect = set(protect)
        for v in sorted(protect):
            if not (0 <= v < self.graph.n):
                return Violation(step, "out_of_range", v)
            if v in self.burned:
                return Violation(step, "protect_burned", v)
            if v in self.protected:
                return Violation(step, "protect_protected", v)
        if budget is not None and len(protect) > budget:
            return Violation(step, "budget_exceeded")
        return None

    def step(self, protect: Iterable[int] = (), budget: int | None = None) -> frozenset[int]:
        protect = frozenset(protect)
        bad = self.check(protect, budget)
        if bad is not None:
            raise StrategyError(bad)
        self.protected |= protect
        new = frozenset(self.threatened())
        self.burned |= new
        # older burned vertices have no unburned, unprotected neighbours left
        self.front = set(new)
        self.records.append(StepRecord(protect, new))
        return new

    def trace(self) -> Trace:
        burned = frozenset(self.burned)
        tr = Trace(
            sources=self.sources,
            per_step=tuple(self.records),
            burned=burned,
            protected=frozenset(self.protected),
            saved=frozenset(self.graph.vertices) - burned,
        )
        STEP_AUDIT.record(tr)
        return tr


def _budget_at(budgets: Sequence[int], t: int) -> int:
    return budgets[t - 1] if t <= len(budgets) else budgets[-1]


def _run(graph: Graph, sources: Iterable[int], budgets: Sequence[int], strategy: Strategy) -> Trace:
    if not budgets:
        raise ValueError("budget sequence must be nonempty")
    if any(b < 0 for b in budgets):
        raise ValueError("budgets must be nonnegative")
    proc = FireProcess(graph, sources)
    while proc.active:
        t = proc.t + 1
        protect = strategy.steps[t - 1] if t <= len(strategy.steps) else frozenset()
        proc.step(protect, _budget_at(budgets, t))
    # trailing empty steps are harmless; anything else would never be applied
    for i in range(proc.t, len(strategy.steps)):
        if strategy.steps[i]:
            raise StrategyError(Violation(i + 1, "leftover"))
    return proc.trace()


def simulate(instance: Instance, strategy: Strategy) -> Trace:
    return _run(instance.graph, [instance.source], [instance.budget], strategy)


def simulate_multi(graph: Graph, sources: Iterable[int], budgets: Sequence[int],
                   strategy: Strategy) -> Trace:
    """Several initial fires and a per-step budget (last entry repeats)."""
    return _run(graph, sources, list(budgets), strategy)


def validate_strategy(instance: Instance, strategy: Strategy) -> Violation | None:
    try:
        simulate(instance, strategy)
    except StrategyError as err:
        return err.violation
    return None
