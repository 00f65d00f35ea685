import pytest
from hypothesis import given

from homred.graph import (
    Graph,
    Partition,
    complete_graph,
    cycle_graph,
    max_degree,
    path_graph,
    quotient,
    square,
)

from conftest import bfs_dist, graphs


def test_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    assert Graph(3, [(0, 1), (1, 0)]).edges == {(0, 1)}


def test_square_small_cases():
    assert square(path_graph(3)) == complete_graph(3)
    assert square(complete_graph(2)) == complete_graph(2)
    assert square(cycle_graph(5)) == complete_graph(5)


@given(graphs(max_n=10))
def test_square_matches_bfs(g):
    expected = {(u, v) for u in g.vertices() for v, dd in bfs_dist(g, u).items() if u < v and dd <= 2}
    sq = square(g)
    assert sq.edges == expected
    assert g.edges <= sq.edges


def test_max_degree():
    assert max_degree(cycle_graph(5)) == 2
    assert max_degree(Graph(4)) == 0
    assert max_degree(Graph(5, [(0, i) for i in range(1, 5)])) == 4


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(3, [[0, 1]])
    with pytest.raises(ValueError):
        Partition(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition(3, [[0, 1, 2], []])


def test_quotient_examples():
    g = complete_graph(2)
    assert quotient(g, Partition(2, [[0, 1]])) == Graph(1)
    p4 = path_graph(4)
    assert quotient(p4, Partition(4, [[0, 3], [1, 2]])) == Graph(2, [(0, 1)])


@given(graphs(max_n=10))
def test_singleton_quotient_is_identity(g):
    assert quotient(g, Partition.singletons(g.n)) == g


@given(graphs(max_n=9, min_n=1))
def test_quotient_edges_have_witnesses(g):
    # blocks of consecutive vertices of size <= 3
    blocks = [list(range(i, min(i + 3, g.n))) for i in range(0, g.n, 3)]
    p = Partition(g.n, blocks)
    q = quotient(g, p)
    for u, v in g.edges:
        if p.block_of(u) != p.block_of(v):
            assert q.has_edge(p.block_of(u), p.block_of(v))
    for a, b in q.edges:
        assert any(g.has_edge(u, v) for u in p.blocks[a] for v in p.blocks[b])
