"""Command-line entry point.

Exit codes: 0 success / "yes", 1 "no" (or bench mismatches),
2 usage or input error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bubbles, gadgets, io, layout, solvers
from .graph import GraphError
from .layout import SizeCapExceeded
from .propagation import STEP_AUDIT, Instance, StrategyError, simulate, simulate_multi

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _graph(path: str):
    return io.parse_edge_list(io.read_text(path))


def _instance(args) -> Instance:
    g = _graph(args.graph)
    if not (0 <= args.source < g.n):
        raise UsageError(f"source {args.source} out of range")
    return Instance(g, args.source, args.budget, getattr(args, "k", None))


def cmd_simulate(args) -> int:
    g = _graph(args.graph)
    strategy = io.parse_strategy(io.read_text(args.strategy))
    if len(args.source) == 1 and len(args.budget) == 1:
        tr = simulate(Instance(g, args.source[0], args.budget[0]), strategy)
    else:
        tr = simulate_multi(g, args.source, args.budget, strategy)
    _emit(io.trace_to_json(tr))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _instance(args)
    if args.algo == "exhaustive":
        res = solvers.exhaustive_optimal(inst, cap=args.cap)
    elif args.algo == "tree":
        res = solvers.tree_optimal(inst)
    elif args.algo == "fpt":
        res = solvers.fpt_pw_delta(inst)
    else:
        res = solvers.greedy_baseline(inst)
    _emit({"algo": args.algo, "minBurned": res.min_burned,
           "witness": io.strategy_to_json(res.witness), "nodesExplored": res.nodes_explored})
    return EXIT_OK


def cmd_decide(args) -> int:
    inst = _instance(args)
    d = solvers.fpt_decide(inst, args.k)
    _emit({"answer": "yes" if d.answer else "no",
           "witness": io.strategy_to_json(d.witness) if d.witness is not None else None,
           "nodesExplored": d.nodes_explored})
    return EXIT_OK if d.answer else EXIT_NO


def cmd_reduce(args) -> int:
    f = io.parse_dimacs_cnf(io.read_text(args.cnf))
    gadgets.validate_cubic_monotone(f)
    tree = gadgets.build_reduction(f, args.budget)
    Path(args.out_graph).write_text(io.format_edge_list(tree.graph))
    Path(args.out_labels).write_text(json.dumps(io.labels_to_json(tree)))
    profile = gadgets.expected_burn_profile(f.n)
    report = {"variables": f.n, "clauses": f.m, "vertices": tree.graph.n, "source": tree.source,
              "budget": tree.budget, "k": tree.k,
              "expectedProfile": {"phase1": profile.phase1, "perClause": list(profile.per_clause),
                                  "total": profile.total}}
    if args.emit_decomposition:
        pd = gadgets.path_decomposition_pw3(tree)
        report["decompositionWidth"] = layout.validate_path_decomposition(tree.graph, pd)
        Path(args.emit_decomposition).write_text(io.format_decomposition(pd))
    code = EXIT_OK
    if args.emit_strategy:
        if args.assignment:
            tau = io.parse_assignment(io.read_text(args.assignment), f.n)
        else:
            tau = gadgets.solve_1in3(f)
        if tau is None:
            report["assignment"] = None
            code = EXIT_NO
        else:
            strategy = gadgets.strategy_from_assignment(tree, tau)
            Path(args.emit_strategy).write_text(json.dumps(io.strategy_to_json(strategy)))
            report["assignment"] = [i + 1 for i, x in enumerate(tau) if x]
    _emit(report)
    return code


def cmd_widths(args) -> int:
    g = _graph(args.graph)
    if args.measure == "cw":
        w, cert = layout.exact_cutwidth(g, cap=args.cap or layout.CUTWIDTH_CAP)
        out = {"layout": list(cert.order)}
    elif args.measure == "bw":
        w, cert = layout.exact_bandwidth(g, cap=args.cap or layout.BANDWIDTH_CAP)
        out = {"layout": list(cert.order)}
    else:
        w, cert = layout.exact_pathwidth(g, cap=args.cap or layout.PATHWIDTH_CAP)
        out = {"bags": [sorted(b) for b in cert.bags]}
    _emit({"measure": args.measure, "width": w, **out})
    return EXIT_OK


def cmd_bound(args) -> int:
    g = _graph(args.graph)
    if args.layout:
        lay = io.parse_layout(io.read_text(args.layout), g.n)
    else:
        _, lay = layout.exact_cutwidth(g)
    res = bubbles.isolation_strategy(g, lay, args.sources, args.budget)
    _emit(io.isolation_to_json(res))
    return EXIT_OK


def bench_graph(g, cap: int) -> dict:
    """Oracle-equivalence and invariant sweep over all sources and b in {1, 2}."""
    rows = {"instances": 0, "mismatches": 0, "greedyExcess": 0}
    for s in g.vertices:
        for b in (1, 2):
            inst = Instance(g, s, b)
            opt = solvers.exhaustive_optimal(inst, cap=cap)
            rows["instances"] += 1
            bad = len(simulate(inst, opt.witness).burned) != opt.min_burned
            if g.is_tree():
                bad |= solvers.tree_optimal(inst).min_burned != opt.min_burned
            for k in range(1, g.n + 1):
                bad |= solvers.fpt_decide(inst, k).answer != (opt.min_burned <= k)
            bad |= solvers.fpt_pw_delta(inst).min_burned != opt.min_burned
            greedy = solvers.greedy_baseline(inst).min_burned
            bad |= greedy < opt.min_burned
            rows["greedyExcess"] += greedy - opt.min_burned
            rows["mismatches"] += int(bad)
    return rows


def cmd_bench(args) -> int:
    files = sorted(p for p in Path(args.corpus).iterdir() if p.suffix in (".txt", ".edges", ".graph"))
    if not files:
        raise UsageError(f"no graph files (*.txt, *.edges, *.graph) in {args.corpus}")
    header = f"{'graph':<28}{'n':>4}{'m':>5}{'inst':>6}{'mism':>6}{'greedy+':>9}{'secs':>8}"
    print(header)
    print("-" * len(header))
    total_mismatch = 0
    for path in files:
        g = io.parse_edge_list(path.read_text())
        if g.n > args.cap:
            print(f"{path.name:<28}{g.n:>4}{len(g.edges):>5}  skipped (size cap {args.cap})")
            continue
        t0 = time.perf_counter()
        rows = bench_graph(g, args.cap)
        total_mismatch += rows["mismatches"]
        print(f"{path.name:<28}{g.n:>4}{len(g.edges):>5}{rows['instances']:>6}"
              f"{rows['mismatches']:>6}{rows['greedyExcess']:>9}{time.perf_counter() - t0:>8.2f}")
    print("-" * len(header))
    print(f"mismatches: {total_mismatch}   step-count violations: {len(STEP_AUDIT.violations)}"
          f" over {STEP_AUDIT.runs} simulations")
    return EXIT_OK if total_mismatch == 0 and not STEP_AUDIT.violations else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="firefighter", description="Firefighter problem toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a strategy and print the trace")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=_int_list, help="vertex id or comma list")
    p.add_argument("--budget", default=[1], type=_int_list, help="budget or per-step comma list")
    p.add_argument("--strategy", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("solve", help="minimise the number of burned vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--budget", default=1, type=int)
    p.add_argument("--algo", choices=["exhaustive", "tree", "fpt", "greedy"], default="exhaustive")
    p.add_argument("--cap", type=int, default=solvers.EXHAUSTIVE_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="can at most k vertices burn? (exit 0 yes, 1 no)")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--budget", default=1, type=int)
    p.add_argument("--k", required=True, type=int)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="build the hardness tree from a DIMACS formula")
    p.add_argument("--cnf", required=True)
    p.add_argument("--budget", default=1, type=int)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-labels", required=True)
    p.add_argument("--emit-strategy", metavar="FILE")
    p.add_argument("--assignment", metavar="FILE",
                   help="DIMACS-style literal list; brute-forced when omitted")
    p.add_argument("--emit-decomposition", metavar="FILE")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("widths", help="exact cutwidth, bandwidth or pathwidth")
    p.add_argument("--graph", required=True)
    p.add_argument("--measure", choices=["cw", "bw", "pw"], required=True)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_widths)

    p = sub.add_parser("bound", help="bubble isolation strategy and burn bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--layout", help="layout file; defaults to an optimal cutwidth layout")
    p.add_argument("--sources", required=True, type=_int_list)
    p.add_argument("--budget", default=[1], type=_int_list)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("bench", help="oracle-equivalence sweep over a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--cap", type=int, default=solvers.EXHAUSTIVE_CAP)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, io.ParseError, GraphError, StrategyError, gadgets.FormulaError,
            solvers.NotATreeError, layout.LayoutError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
