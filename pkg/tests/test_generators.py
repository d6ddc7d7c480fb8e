import itertools

import pytest

from isoset import (
    Graph,
    Special,
    ExtremalSpec,
    InadmissibleBackbone,
    BadSpec,
    admissibility,
    build_extremal,
    canonical_form,
    cycle_graph,
    enumerate_all,
    enumerate_connected,
    is_connected,
    is_isolating,
    isolation_number,
    path_graph,
    random_admissible,
)
from isoset.exact import OrderTooLarge
from isoset.generators import (
    CLASS_C6_FREE,
    CLASS_INDUCED56_FREE,
    CLASS_INDUCED6_FREE,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_connected_counts_small(connected_catalog):
    for n in range(1, 8):
        assert len(connected_catalog[n]) == CONNECTED_COUNTS[n]


def test_all_graph_counts(all_graphs_to_7):
    for n in range(1, 8):
        assert len(all_graphs_to_7[n]) == ALL_COUNTS[n]


def test_enumeration_matches_labeled_bruteforce():
    # every connected labeled graph on <= 5 vertices maps to exactly one
    # emitted representative
    for n in range(1, 6):
        emitted = {canonical_form(g) for g in enumerate_connected(n)}
        assert len(emitted) == CONNECTED_COUNTS[n]
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        seen = set()
        for mask in range(1 << len(pairs)):
            g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            if is_connected(g):
                cert = canonical_form(g)
                assert cert in emitted
                seen.add(cert)
        assert seen == emitted


def test_enumeration_pairwise_distinct(connected_catalog):
    for n in (4, 5, 6):
        certs = [canonical_form(g) for g in connected_catalog[n]]
        assert len(set(certs)) == len(certs)


def test_enumeration_bounds():
    with pytest.raises(OrderTooLarge):
        list(enumerate_connected(9))
    with pytest.raises(OrderTooLarge):
        list(enumerate_all(0))


def test_canonical_form_isomorphism_invariant():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    for perm in itertools.permutations(range(5)):
        h = Graph(5, [(perm[u], perm[v]) for u, v in g.edges])
        assert canonical_form(h) == canonical_form(g)


def test_build_extremal_examples():
    inst = build_extremal(ExtremalSpec(Graph(1), (Special.C7,)))
    assert inst.graph.n == 8 and len(inst.designated_witness) == 2
    assert is_isolating(inst.graph, inst.designated_witness, 1)[0]

    fig1 = build_extremal(
        ExtremalSpec(path_graph(4), (Special.P3, Special.P3, Special.C7,
                                     Special.C11))
    )
    assert fig1.graph.n == 28 and len(fig1.designated_witness) == 7
    assert [len(b) for b in fig1.blocks] == [4, 4, 8, 12]

    leafy = build_extremal(ExtremalSpec(Graph(1), (Special.P3,), leaves=3))
    assert leafy.graph.n == 7
    assert len(leafy.designated_witness) == 1 == leafy.graph.n // 4
    assert isolation_number(leafy.graph, 1).size == 1


def test_build_extremal_rejections():
    with pytest.raises(BadSpec):
        build_extremal(ExtremalSpec(Graph(1), ()))
    with pytest.raises(BadSpec):
        build_extremal(ExtremalSpec(Graph(1), (Special.P3,), leaves=4))
    with pytest.raises(InadmissibleBackbone):
        build_extremal(ExtremalSpec(Graph(2), (Special.P3, Special.P3)))
    # C5 backbone has an induced 5-cycle but no 6-cycle: still admissible
    build_extremal(ExtremalSpec(cycle_graph(5), (Special.P3,) * 5))
    # C6 backbone sits in neither class
    with pytest.raises(InadmissibleBackbone):
        build_extremal(ExtremalSpec(cycle_graph(6), (Special.P3,) * 6))


def test_block_partition_covers_core():
    inst = build_extremal(
        ExtremalSpec(path_graph(3), (Special.C3, Special.C7, Special.P3))
    )
    union = set()
    for b in inst.blocks:
        assert not (union & b)
        union |= b
    assert union == set(range(inst.graph.n))


def test_random_admissible_classes():
    for cls, flags in (
        (CLASS_C6_FREE, ("c6_free",)),
        (CLASS_INDUCED56_FREE, ("induced5_free", "induced6_free")),
        (CLASS_INDUCED6_FREE, ("induced6_free",)),
    ):
        for seed in range(8):
            g = random_admissible(14, 20, cls, seed=seed)
            assert is_connected(g)
            rep = admissibility(g)
            for flag in flags:
                assert getattr(rep, flag)


def test_random_admissible_determinism_and_edges():
    a = random_admissible(12, 16, CLASS_C6_FREE, seed=42)
    b = random_admissible(12, 16, CLASS_C6_FREE, seed=42)
    assert a == b
    assert random_admissible(1, 0, CLASS_C6_FREE, seed=0).n == 1
    # on 4 vertices every graph is 6-cycle-free; the full K4 is reachable
    k4 = random_admissible(4, 6, CLASS_C6_FREE, seed=1)
    assert k4.m == 6
