import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homred.graph import Graph, complete_graph, path_graph, square
from homred.grouping import first_fit, from_partition, random_grouping, singleton_grouping
from homred.oracles import brute_force_3coloring, brute_force_list_hom
from homred.reduction import (
    AmbiguousPort,
    Code,
    InconsistentImage,
    PortMap,
    compile_instance,
    edge_rule,
    encode_coloring,
    lift_coloring,
    port_map,
    project_hom,
)
from homred.solvers import check_3coloring, check_list_hom

from conftest import graphs


def test_port_map_isolated_bucket():
    grp = singleton_grouping(Graph(3, [(1, 2)]))
    assert port_map(grp, 0).ports == {}


def test_port_map_single_edge():
    g = Graph(2, [(0, 1)])
    grp = singleton_grouping(g, [2, 5])
    pm = port_map(grp, 0)
    assert pm.ports == {5: 0}
    assert pm[5] == 0 and pm[1] is None


def test_port_map_p3_singletons():
    grp = singleton_grouping(path_graph(3), [1, 2, 3])
    pm = port_map(grp, 1)
    assert pm.ports == {1: 1, 3: 1}


def test_port_map_ambiguities():
    g = Graph(4, [(0, 2), (1, 3)])
    with pytest.raises(AmbiguousPort):
        port_map(from_partition(g, [[0, 1], [2, 3]], [1, 2]), 0)
    # two neighbor buckets with the same label
    with pytest.raises(AmbiguousPort):
        port_map(singleton_grouping(path_graph(3), [1, 2, 1]), 1)


def test_encode_coloring_examples():
    assert encode_coloring(PortMap(0, {}), {}) == Code()
    assert encode_coloring(PortMap(0, {5: 7}), {7: 2}) == Code.of({5: 2})
    assert encode_coloring(PortMap(0, {1: 4, 3: 4}), {4: 1}) == Code.of({1: 1, 3: 1})
    assert Code.of({1: 1, 3: 1}).dense(4) == (1, 0, 1, 0)


def test_edge_rule_examples():
    l1, l2 = 3, 7
    assert edge_rule(Code.of({l2: 1}), l1, Code.of({l1: 2}), l2)
    assert not edge_rule(Code.of({l2: 1}), l1, Code.of({l1: 1}), l2)


def test_k3_and_k4():
    for n, expected in ((3, True), (4, False)):
        g = complete_graph(n)
        inst = compile_instance(g, singleton_grouping(g))
        assert (brute_force_list_hom(inst.g_prime, inst.h, inst.lists) is not None) is expected
        assert (brute_force_3coloring(g) is not None) is expected


def test_lift_k3():
    g = complete_graph(3)
    inst = compile_instance(g, singleton_grouping(g))
    h = lift_coloring([1, 2, 3], inst)
    assert check_list_hom(inst.g_prime, inst.h, inst.lists, h).ok
    assert project_hom(h, inst) == [1, 2, 3]


def test_lift_edgeless_uses_zero_codes():
    g = Graph(4)
    inst = compile_instance(g, singleton_grouping(g))
    h = lift_coloring([3, 1, 2, 2], inst)
    assert all(inst.h_vertices[x][0] == Code() for x in h)
    assert project_hom(h, inst) == [1, 1, 1, 1]


def test_lift_p2_images_adjacent():
    g = path_graph(2)
    inst = compile_instance(g, singleton_grouping(g))
    a, b = lift_coloring([1, 2], inst)
    assert inst.h.has_edge(a, b)


def test_lift_rejects_improper():
    g = path_graph(2)
    inst = compile_instance(g, singleton_grouping(g))
    with pytest.raises(ValueError):
        lift_coloring([1, 1], inst)


def test_project_rejects_inconsistent_image():
    g = path_graph(3)
    inst = compile_instance(g, singleton_grouping(g))
    zero_for_middle = inst.lists[0][0]  # a code with support {2}, not matching bucket 1's ports {1, 3}
    with pytest.raises(InconsistentImage):
        project_hom([zero_for_middle, zero_for_middle, inst.lists[2][0]], inst)


def test_k3_any_solution_projects_to_proper_coloring():
    g = complete_graph(3)
    inst = compile_instance(g, singleton_grouping(g))
    h = brute_force_list_hom(inst.g_prime, inst.h, inst.lists)
    assert check_3coloring(g, project_hom(h, inst)).ok


def _groupings(g, seed):
    yield singleton_grouping(g)
    yield random_grouping(g, random.Random(seed))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8, max_degree=4), st.integers(0, 2**32))
def test_equisatisfiable(g, seed):
    colorable = brute_force_3coloring(g) is not None
    for grp in _groupings(g, seed):
        inst = compile_instance(g, grp)
        hom = brute_force_list_hom(inst.g_prime, inst.h, inst.lists)
        assert (hom is not None) == colorable
        if hom is not None:
            assert check_3coloring(g, project_hom(hom, inst)).ok


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, max_degree=4), st.integers(0, 2**32))
def test_instance_structure(g, seed):
    for grp in _groupings(g, seed):
        inst = compile_instance(g, grp)
        assert inst.g_prime == grp.quotient
        for b, lst in enumerate(inst.lists):
            assert all(inst.h_vertices[k][1] == grp.label[b] for k in lst)
            assert all(inst.h_vertices[k][0].support() == set(inst.ports[b].ports) for k in lst)
        assert all(a < b for a, b in inst.h_edges)
        hv = inst.h_vertices
        for a in range(len(hv)):
            for b in range(len(hv)):
                if a != b:
                    assert ((min(a, b), max(a, b)) in inst.h_edges) == edge_rule(*hv[a], *hv[b])
        rep = inst.size_report()
        assert rep["h_within_bound"] and rep["g_prime_within_n_over_r"]
        assert len(hv) <= sum(3 ** len(pm.port_vertices()) for pm in inst.ports)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, max_degree=4), st.integers(0, 2**32))
def test_lift_then_project_roundtrip(g, seed):
    col = brute_force_3coloring(g)
    if col is None:
        return
    for grp in _groupings(g, seed):
        inst = compile_instance(g, grp)
        h = lift_coloring(col, inst)
        assert check_list_hom(inst.g_prime, inst.h, inst.lists, h).ok
        back = project_hom(h, inst)
        assert check_3coloring(g, back).ok
        for pm in inst.ports:
            for u in pm.ports.values():
                assert back[u] == col[u]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, max_degree=3))
def test_exhaustive_target_agrees_with_pruned(g):
    labels = [c + 1 for c in first_fit(square(g))]
    if max(labels, default=1) > 4:
        return
    grp = singleton_grouping(g, labels)
    pruned = compile_instance(g, grp)
    full = compile_instance(g, grp, exhaustive=True)
    L = grp.L
    assert len(full.h_vertices) == 4**L * L
    a = brute_force_list_hom(pruned.g_prime, pruned.h, pruned.lists)
    b = brute_force_list_hom(full.g_prime, full.h, full.lists)
    assert (a is None) == (b is None)
    # the same (code, label) pairs are listed in both
    for b_ in range(len(grp)):
        assert {pruned.h_vertices[k] for k in pruned.lists[b_]} == {full.h_vertices[k] for k in full.lists[b_]}


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8, max_degree=4), st.integers(0, 2**32))
def test_fast_edge_materialization_matches_quadratic_scan(g, seed):
    grp = random_grouping(g, random.Random(seed))
    fast = compile_instance(g, grp)
    slow = compile_instance(g, grp, rule=lambda *a: edge_rule(*a))
    assert fast.h_edges == slow.h_edges
