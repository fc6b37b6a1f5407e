import random
from itertools import product

import pytest

from firefighter import gadgets as gd
from firefighter.layout import validate_path_decomposition
from firefighter.propagation import FireProcess, Instance, simulate

SIX_VARS = gd.CubicMonotoneFormula(6, ((0, 2, 5), (0, 1, 2), (2, 3, 4), (1, 3, 4), (0, 3, 5), (1, 5, 4)))
TRIPLE = gd.CubicMonotoneFormula(3, ((0, 1, 2),) * 3)
UNSAT = gd.CubicMonotoneFormula(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))


@pytest.fixture(scope="module")
def fig_tree():
    return gd.build_reduction(SIX_VARS)


@pytest.fixture(scope="module")
def triple_tree():
    return gd.build_reduction(TRIPLE)


def test_validation():
    assert gd.cubic_monotone_violation(SIX_VARS) is None
    assert SIX_VARS.m == SIX_VARS.n == 6
    assert gd.cubic_monotone_violation(TRIPLE) is None
    bad = gd.CubicMonotoneFormula(3, ((0, 1, 2), (0, 1, 2), (1, 2, 2)))
    assert gd.cubic_monotone_violation(bad) is not None
    twice = gd.CubicMonotoneFormula(3, ((0, 1, 2), (0, 1, 2), (1, 2, 1)))
    with pytest.raises(gd.FormulaError):
        gd.validate_cubic_monotone(twice)


def test_extend_formula():
    ext = gd.extend_formula(SIX_VARS)
    assert ext.complement_clauses == SIX_VARS.clauses
    assert len(gd.extend_formula(TRIPLE).complement_clauses) == 3


def test_is_satisfying():
    ext = gd.extend_formula(SIX_VARS)
    tau = (True, False, False, False, True, False)
    assert gd.is_satisfying(ext, tau)
    assert not gd.is_satisfying(ext, (False,) * 6)
    assert not gd.is_satisfying(ext, (True,) * 6)


def test_solver():
    tau = gd.solve_1in3(TRIPLE)
    assert sum(tau) == 1
    assert gd.solve_1in3(SIX_VARS) is not None
    assert gd.solve_1in3(UNSAT) is None


@pytest.mark.parametrize("n", range(1, 30))
def test_k_arithmetic(n):
    assert n * (11 * n + 7) % 2 == 0
    assert gd.expected_burn_profile(n).total == gd.reduction_k(n)


def test_profiles():
    assert gd.expected_burn_profile(6) == gd.BurnProfile(65, (50, 41, 32, 23, 14, 5), 230)
    assert gd.expected_burn_profile(3) == gd.BurnProfile(23, (23, 14, 5), 65)
    assert gd.reduction_k(3) == 65 and gd.reduction_k(6) == 230


def test_tree_shape(fig_tree):
    t = fig_tree
    g = t.graph
    assert g.is_tree()
    assert t.k == 230 and t.p == 11
    centers = t.guard_centers
    assert len(centers) == 8 * 6
    for c in centers:
        leaves = [w for w in g.adj[c] if t.roles[w] == gd.GUARD_LEAF]
        assert len(leaves) == t.k
    for v, r in enumerate(t.roles):
        assert r in gd.ROLES


def test_literals_at_common_depth(fig_tree):
    from firefighter.graph import distances
    dist = distances(fig_tree.graph, fig_tree.source)
    depths = {dist[v] for v in fig_tree.literal.values()}
    assert depths == {2 * 6}


def test_budget_two_shape():
    t = gd.build_reduction(TRIPLE, 2)
    assert t.graph.is_tree()
    assert len(t.tail) == 16 and t.tail[0] == t.source
    assert all(len(gs) == 1 for gs in t.tail_guards)
    assert t.k == 80


def front_only_trace(tree, strategy):
    """Simulate, asserting each protected vertex touches the fire when protected."""
    proc = FireProcess(tree.graph, [tree.source])
    steps = list(strategy.steps)
    while proc.active:
        pick = steps[proc.t] if proc.t < len(steps) else frozenset()
        for v in pick:
            assert any(w in proc.burned for w in tree.graph.adj[v])
        proc.step(pick, tree.budget)
    return proc.trace()


@pytest.mark.parametrize("formula", [TRIPLE, SIX_VARS], ids=["n3", "n6"])
def test_every_satisfying_assignment_burns_k(formula):
    tree = gd.build_reduction(formula)
    sols = list(gd.all_1in3_solutions(formula))
    assert sols
    for tau in sols:
        tr = front_only_trace(tree, gd.strategy_from_assignment(tree, tau))
        assert len(tr.burned) == tree.k
        assert not set(tree.guard_centers) & tr.burned


def test_random_formulas_burn_k():
    rng = random.Random(5)
    checked = 0
    for n in (3, 4, 5, 6):
        for _ in range(3):
            f = gd.random_cubic_monotone(n, rng)
            gd.validate_cubic_monotone(f)
            tree = gd.build_reduction(f)
            for tau in gd.all_1in3_solutions(f):
                tr = simulate(Instance(tree.graph, tree.source, 1),
                              gd.strategy_from_assignment(tree, tau))
                assert len(tr.burned) == tree.k
                checked += 1
    assert checked > 0


def test_unsatisfying_assignment_rejected(triple_tree):
    with pytest.raises(gd.FormulaError):
        gd.strategy_from_assignment(triple_tree, (True, True, False))


def test_extended_equivalence_small():
    rng = random.Random(8)
    for n in range(3, 9):
        f = gd.random_cubic_monotone(n, rng)
        ext = gd.extend_formula(f)
        plain = any(gd.is_one_in_three(f, tau) for tau in product((False, True), repeat=n))
        extended = any(gd.is_satisfying(ext, tau) for tau in product((False, True), repeat=n))
        assert plain == extended


@pytest.mark.parametrize("budget", [1, 2])
def test_width_three_decomposition(triple_tree, budget):
    tree = triple_tree if budget == 1 else gd.build_reduction(TRIPLE, 2)
    assert validate_path_decomposition(tree.graph, gd.path_decomposition_pw3(tree)) <= 3


def test_variable_subtrees_width_two(fig_tree):
    for i in range(6):
        for neg in (False, True):
            sub, pd = gd.variable_subtree(fig_tree, i, neg)
            assert sub.is_tree()
            assert validate_path_decomposition(sub, pd) <= 2
