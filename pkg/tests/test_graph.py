import math

import pytest
from hypothesis import given, settings, strategies as st

from isoset import (
    EmptyGraph,
    EndpointOutOfRange,
    Graph,
    SelfLoop,
    Special,
    bfs_distance,
    closed_neighborhood,
    components,
    cycle_graph,
    delete_closed_neighborhood,
    disjoint_union,
    from_edge_list,
    max_degree,
    path_graph,
    special_kind,
    star_graph,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(all_pairs)) if all_pairs else st.just(set()))
    return Graph(n, edges)


def test_from_edge_list_basic():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.degree_sequence() == (1, 1, 2)
    assert from_edge_list(3, [(0, 1), (1, 2), (2, 0)]).m == 3
    # duplicates collapse
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1


def test_from_edge_list_rejects():
    with pytest.raises(EndpointOutOfRange):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(SelfLoop):
        from_edge_list(2, [(1, 1)])


def test_closed_neighborhood_examples():
    p3 = path_graph(3)
    assert closed_neighborhood(p3, {1}) == {0, 1, 2}
    c7 = cycle_graph(7)
    assert closed_neighborhood(c7, {0}) == {6, 0, 1}
    assert closed_neighborhood(c7, set()) == set()


def test_delete_closed_neighborhood_examples():
    c7 = cycle_graph(7)
    h, back = delete_closed_neighborhood(c7, {0})
    assert back == (2, 3, 4, 5)
    assert h.degree_sequence() == (1, 1, 2, 2)  # a path on 4 vertices

    p3 = path_graph(3)
    h, back = delete_closed_neighborhood(p3, {1})
    assert h.n == 0 and back == ()

    c11 = cycle_graph(11)
    h, back = delete_closed_neighborhood(c11, {0, 4})
    comps = components(h)
    originals = [tuple(back[m[i]] for i in range(c.n)) for c, m in comps]
    assert originals == [(2,), (6, 7, 8, 9)]
    assert comps[1][0].degree_sequence() == (1, 1, 2, 2)


def test_components_examples():
    both = disjoint_union([path_graph(3), cycle_graph(3)])
    assert [c.n for c, _ in components(both)] == [3, 3]
    assert len(components(cycle_graph(7))) == 1
    assert [c.n for c, _ in components(Graph(4))] == [1, 1, 1, 1]


def test_max_degree_examples():
    assert max_degree(path_graph(3)) == (2, 1)
    assert max_degree(cycle_graph(11)) == (2, 0)
    assert max_degree(star_graph(4)) == (4, 0)
    with pytest.raises(EmptyGraph):
        max_degree(Graph(0))


def test_special_kind_examples():
    assert special_kind(cycle_graph(7)) is Special.C7
    assert special_kind(path_graph(4)) is None
    assert special_kind(star_graph(3)) is None
    assert special_kind(path_graph(3)) is Special.P3
    assert special_kind(cycle_graph(3)) is Special.C3
    assert special_kind(cycle_graph(11)) is Special.C11
    assert special_kind(disjoint_union([path_graph(3), Graph(1)])) is None


def test_special_kind_matches_isomorphism_oracle():
    nx = pytest.importorskip("networkx")
    import random

    targets = {
        Special.P3: nx.path_graph(3),
        Special.C3: nx.cycle_graph(3),
        Special.C7: nx.cycle_graph(7),
        Special.C11: nx.cycle_graph(11),
    }
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 11)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.3
        ]
        g = Graph(n, edges)
        h = nx.Graph(edges)
        h.add_nodes_from(range(n))
        expect = None
        for kind, tgt in targets.items():
            if nx.is_isomorphic(h, tgt):
                expect = kind
        assert special_kind(g) is expect


def test_bfs_distance_examples():
    assert bfs_distance(cycle_graph(7), 0) == [0, 1, 2, 3, 3, 2, 1]
    assert bfs_distance(path_graph(3), 0) == [0, 1, 2]
    two = disjoint_union([path_graph(2), path_graph(2)])
    assert bfs_distance(two, 0) == [0, 1, math.inf, math.inf]


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_closed_neighborhood_superset(g):
    d = set(range(0, g.n, 2))
    assert closed_neighborhood(g, d) >= d


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_deletion_order_and_edges(g):
    d = {0} if g.n else set()
    nd = closed_neighborhood(g, d)
    h, back = delete_closed_neighborhood(g, d)
    assert h.n == g.n - len(nd)
    kept = set(back)
    expect = {(u, v) for u, v in g.edges if u in kept and v in kept}
    got = {(back[u], back[v]) for u, v in h.edges}
    assert got == expect


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_components_partition(g):
    comps = components(g)
    seen = [back[i] for _, back in comps for i in range(_.n)]
    assert sorted(seen) == list(range(g.n))
    assert sum(c.n for c, _ in comps) == g.n
