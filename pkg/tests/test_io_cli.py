import json

import pytest
from hypothesis import given, settings, strategies as st

from firefighter import io
from firefighter.cli import main
from firefighter.gadgets import CubicMonotoneFormula, expected_burn_profile
from firefighter.graph import path_graph, star_graph
from firefighter.layout import PathDecomposition
from firefighter.propagation import Instance, Strategy, simulate
from tests.test_graph import graphs


def test_parse_edge_list():
    g = io.parse_edge_list("n 3\n0 1\n1 2")
    assert g == path_graph(3)
    g = io.parse_edge_list("# comment\n\nn 2\n0 1\n")
    assert g.n == 2


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("x 3\n", 1),
    ("n 3\n0 1\n1 5\n", 3),
    ("n 3\n0 1\n1 0\n", 3),
    ("n 3\n1 1\n", 2),
    ("n 3\n0 a\n", 2),
    ("n 3\n0 1 2\n", 2),
])
def test_edge_list_errors(text, line):
    with pytest.raises(io.ParseError) as err:
        io.parse_edge_list(text)
    assert err.value.line == line


def test_parse_dimacs():
    f = io.parse_dimacs_cnf("p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0")
    assert f == CubicMonotoneFormula(3, ((0, 1, 2),) * 3)
    f = io.parse_dimacs_cnf("c hi\np cnf 3 1\n1 2\n3 0\n")
    assert f.clauses == ((0, 1, 2),)


@pytest.mark.parametrize("text, line", [
    ("p cnf 2 1\n1 -2 0", 2),
    ("p cnf 2 1\n1 3 0", 2),
    ("1 2 0\n", 1),
    ("p dnf 2 1\n", 1),
])
def test_dimacs_errors(text, line):
    with pytest.raises(io.ParseError) as err:
        io.parse_dimacs_cnf(text)
    assert err.value.line == line


def test_dimacs_clause_count_mismatch():
    with pytest.raises(io.ParseError):
        io.parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n")


def test_parse_strategy_errors():
    assert io.parse_strategy('{"steps": [[1], []]}') == Strategy((frozenset({1}), frozenset()))
    with pytest.raises(io.ParseError) as err:
        io.parse_strategy('{"steps": [\n[1,\n}')
    assert err.value.line is not None
    with pytest.raises(io.ParseError):
        io.parse_strategy('{"steps": [["a"]]}')
    with pytest.raises(io.ParseError):
        io.parse_strategy('[1]')


def test_parse_assignment():
    assert io.parse_assignment("v 1 -2 3 0\n", 3) == (True, False, True)
    with pytest.raises(io.ParseError):
        io.parse_assignment("4\n", 3)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.data())
def test_round_trips(g, data):
    assert io.parse_edge_list(io.format_edge_list(g)) == g
    steps = data.draw(st.lists(st.frozensets(st.integers(0, 9), max_size=3), max_size=4))
    s = Strategy(tuple(steps))
    assert io.parse_strategy(json.dumps(io.strategy_to_json(s))) == s
    bags = data.draw(st.lists(st.frozensets(st.integers(0, 9), min_size=1), max_size=4))
    pd = PathDecomposition(tuple(bags))
    assert io.parse_decomposition(io.format_decomposition(pd)) == pd
    tr = simulate(Instance(g, data.draw(st.integers(0, g.n - 1)), 1), Strategy())
    assert io.trace_from_json(json.loads(json.dumps(io.trace_to_json(tr)))) == tr


def test_dimacs_round_trip():
    f = CubicMonotoneFormula(6, ((0, 2, 5), (0, 1, 2), (2, 3, 4), (1, 3, 4), (0, 3, 5), (1, 5, 4)))
    assert io.parse_dimacs_cnf(io.format_dimacs_cnf(f)) == f


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_cli_decide(files, capsys):
    p5 = files("p5.txt", io.format_edge_list(path_graph(5)))
    k14 = files("k14.txt", io.format_edge_list(star_graph(4)))
    code, out = run(["decide", "--graph", p5, "--source", "0", "--k", "1"], capsys)
    assert code == 0 and json.loads(out.out)["answer"] == "yes"
    code, out = run(["decide", "--graph", k14, "--source", "0", "--budget", "1", "--k", "3"], capsys)
    assert code == 1 and json.loads(out.out)["answer"] == "no"


def test_cli_widths(files, capsys):
    k13 = files("k13.txt", io.format_edge_list(star_graph(3)))
    code, out = run(["widths", "--graph", k13, "--measure", "pw"], capsys)
    data = json.loads(out.out)
    assert code == 0 and data["width"] == 1 and len(data["bags"]) >= 1
    big = files("p20.txt", io.format_edge_list(path_graph(20)))
    code, _ = run(["widths", "--graph", big, "--measure", "cw"], capsys)
    assert code == 3


@pytest.mark.parametrize("algo", ["exhaustive", "tree", "fpt", "greedy"])
def test_cli_solve(files, capsys, algo):
    p5 = files("p5.txt", io.format_edge_list(path_graph(5)))
    code, out = run(["solve", "--graph", p5, "--source", "2", "--algo", algo], capsys)
    assert code == 0 and json.loads(out.out)["minBurned"] == 2


def test_cli_simulate_and_errors(files, capsys):
    p5 = files("p5.txt", io.format_edge_list(path_graph(5)))
    s = files("s.json", '{"steps": [[1, 3]]}')
    code, out = run(["simulate", "--graph", p5, "--source", "0,4", "--budget", "2", "--strategy", s], capsys)
    assert code == 0 and json.loads(out.out)["burned"] == [0, 4]
    code, out = run(["simulate", "--graph", p5, "--source", "0", "--strategy", s], capsys)
    assert code == 2 and "budget" in out.err
    bad = files("bad.txt", "n 3\n0 9\n")
    code, out = run(["decide", "--graph", bad, "--source", "0", "--k", "1"], capsys)
    assert code == 2 and "line 2" in out.err
    with pytest.raises(SystemExit) as err:
        main(["decide", "--bogus"])
    assert err.value.code == 2


def test_cli_bound(files, capsys):
    p5 = files("p5.txt", io.format_edge_list(path_graph(5)))
    lay = files("lay.txt", "0 1 2 3 4\n")
    code, out = run(["bound", "--graph", p5, "--layout", lay, "--sources", "2"], capsys)
    data = json.loads(out.out)
    assert code == 0 and data["confined"] and data["bound"] == 8


def test_cli_reduce_then_simulate(files, capsys, tmp_path):
    cnf = files("f.cnf", "p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n")
    g, labels, strat, dec = (str(tmp_path / x) for x in ("g.txt", "l.json", "s.json", "d.txt"))
    code, out = run(["reduce", "--cnf", cnf, "--out-graph", g, "--out-labels", labels,
                     "--emit-strategy", strat, "--emit-decomposition", dec], capsys)
    report = json.loads(out.out)
    assert code == 0 and report["k"] == 65 and report["decompositionWidth"] <= 3
    lab = json.loads(open(labels).read())
    assert lab["k"] == 65 and {m["clause"] for m in lab["clauseMap"].values()} == {1, 2, 3}
    code, out = run(["simulate", "--graph", g, "--source", str(lab["source"]), "--strategy", strat], capsys)
    assert code == 0
    assert len(json.loads(out.out)["burned"]) == expected_burn_profile(3).total


def test_cli_reduce_with_assignment_file(files, capsys, tmp_path):
    cnf = files("f.cnf", "p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n")
    good = files("a.txt", "2 -1 -3\n")
    bad = files("b.txt", "1 2\n")
    outs = [str(tmp_path / x) for x in ("g.txt", "l.json", "s.json")]
    args = ["reduce", "--cnf", cnf, "--out-graph", outs[0], "--out-labels", outs[1],
            "--emit-strategy", outs[2], "--assignment"]
    code, out = run(args + [good], capsys)
    assert code == 0 and json.loads(out.out)["assignment"] == [2]
    code, out = run(args + [bad], capsys)
    assert code == 2


def test_cli_reduce_unsatisfiable(files, capsys, tmp_path):
    cnf = files("u.cnf", "p cnf 4 4\n1 2 3 0\n1 2 4 0\n1 3 4 0\n2 3 4 0\n")
    code, out = run(["reduce", "--cnf", cnf, "--out-graph", str(tmp_path / "g"),
                     "--out-labels", str(tmp_path / "l"), "--emit-strategy", str(tmp_path / "s")],
                    capsys)
    assert code == 1 and json.loads(out.out)["assignment"] is None


def test_cli_bench(tmp_path, capsys):
    (tmp_path / "p5.txt").write_text(io.format_edge_list(path_graph(5)))
    (tmp_path / "k13.txt").write_text(io.format_edge_list(star_graph(3)))
    code, out = run(["bench", "--corpus", str(tmp_path)], capsys)
    assert code == 0 and "mismatches: 0" in out.out
