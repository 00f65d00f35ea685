import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homred.graph import Graph, complete_graph, cycle_graph, petersen_graph
from homred.oracles import brute_force_3coloring, brute_force_list_hom
from homred.solvers import (
    BudgetExceeded,
    check_3coloring,
    check_list_hom,
    degeneracy_order,
    solve_3coloring,
    solve_hom,
    solve_list_hom,
)

from conftest import graphs


def enumerate_3colorable(g):
    return any(all(c[u] != c[v] for u, v in g.edges) for c in itertools.product(range(3), repeat=g.n))


def enumerate_list_hom(g, h, lists):
    doms = [sorted(lists[v]) for v in g.vertices()]
    return any(all(h.has_edge(m[u], m[v]) for u, v in g.edges) for m in itertools.product(*doms))


def test_3coloring_examples():
    col = solve_3coloring(complete_graph(3))
    assert sorted(col) == [1, 2, 3]
    assert solve_3coloring(complete_graph(4)) is None
    pet = petersen_graph()
    assert enumerate_3colorable(pet)
    assert check_3coloring(pet, solve_3coloring(pet)).ok


def test_degeneracy_order_is_permutation():
    g = petersen_graph()
    assert sorted(degeneracy_order(g)) == list(range(10))


def test_list_hom_examples():
    k2 = complete_graph(2)
    m = solve_list_hom(k2, k2, [[0, 1], [0, 1]])
    assert check_list_hom(k2, k2, None, m).ok
    assert solve_list_hom(k2, k2, [[0, 1], []]) is None
    assert solve_list_hom(cycle_graph(5), k2, None) is None


def test_list_hom_rejects_invalid_targets():
    with pytest.raises(ValueError):
        solve_list_hom(Graph(1), Graph(2), [[5]])


def test_hom_examples():
    k3 = complete_graph(3)
    m = solve_hom(k3, k3)
    assert sorted(m) == [0, 1, 2]
    assert solve_hom(k3, complete_graph(2)) is None
    assert solve_hom(Graph(3, [(0, 1)]), Graph(1)) is None


def test_check_list_hom_witnesses():
    g = Graph(2, [(0, 1)])
    h = Graph(3, [(0, 1)])
    rep = check_list_hom(g, h, None, [0, 2])
    assert rep.violations == [("edge", (0, 1))]
    rep = check_list_hom(g, h, [[0], [0]], [0, 1])
    assert rep.violations == [("list", 1)]


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        solve_3coloring(complete_graph(4), budget=3)
    with pytest.raises(BudgetExceeded):
        solve_hom(complete_graph(5), complete_graph(4), budget=10)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_3coloring_matches_enumeration(g):
    col = solve_3coloring(g)
    assert (col is not None) == enumerate_3colorable(g)
    assert (brute_force_3coloring(g) is not None) == enumerate_3colorable(g)
    if col is not None:
        assert check_3coloring(g, col).ok


@st.composite
def list_instances(draw):
    g = draw(graphs(max_n=5))
    h = draw(graphs(max_n=5, min_n=1))
    lists = [draw(st.sets(st.integers(0, h.n - 1), max_size=h.n)) for _ in g.vertices()]
    return g, h, lists


@settings(max_examples=200, deadline=None)
@given(list_instances())
def test_list_hom_matches_enumeration(inst):
    g, h, lists = inst
    expected = enumerate_list_hom(g, h, lists)
    m = solve_list_hom(g, h, lists)
    assert (m is not None) == expected
    assert (brute_force_list_hom(g, h, lists) is not None) == expected
    if m is not None:
        assert check_list_hom(g, h, lists, m).ok


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_hom_to_triangle_iff_3colorable(g):
    assert (solve_hom(g, complete_graph(3)) is not None) == (solve_3coloring(g) is not None)
