import math
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from isoset import (
    Graph,
    admissibility,
    complete_graph,
    cycle_graph,
    find_cycle_of_length,
    find_induced_cycle_of_length,
    girth,
    path_graph,
)


def brute_cycle_on(g, subset):
    """Is there a cycle visiting exactly this vertex subset?"""
    first, *rest = subset
    for perm in permutations(rest):
        seq = (first,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))):
            return True
    return False


def brute_has_cycle(g, length, induced):
    for subset in combinations(range(g.n), length):
        if induced:
            degs = sorted(
                sum(1 for w in subset if g.has_edge(v, w)) for v in subset
            )
            if degs == [2] * length and brute_cycle_on(g, subset):
                return True
        elif brute_cycle_on(g, subset):
            return True
    return False


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=3, max_value=max_n))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(all_pairs)))
    return Graph(n, edges)


def test_find_cycle_examples():
    assert find_cycle_of_length(cycle_graph(6), 6).vertices == (0, 1, 2, 3, 4, 5)
    assert find_cycle_of_length(cycle_graph(7), 6) is None
    tri = find_cycle_of_length(complete_graph(4), 3)
    assert tri is not None and len(tri.vertices) == 3


def test_find_induced_cycle_examples():
    w = find_induced_cycle_of_length(cycle_graph(5), 5)
    assert w is not None and w.induced
    assert find_induced_cycle_of_length(complete_graph(4), 4) is None
    chorded = Graph(6, list(cycle_graph(6).edges) + [(0, 3)])
    assert find_induced_cycle_of_length(chorded, 6) is None
    four = find_induced_cycle_of_length(chorded, 4)
    assert four is not None and len(four.vertices) == 4


def test_witness_is_a_cycle():
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 2)])
    for ln in (4, 5):
        w = find_cycle_of_length(g, ln)
        if w is None:
            continue
        verts = w.vertices
        assert len(set(verts)) == ln
        assert all(
            g.has_edge(verts[i], verts[(i + 1) % ln]) for i in range(ln)
        )


def test_girth_examples():
    assert girth(cycle_graph(11)) == 11
    assert girth(path_graph(7)) == math.inf
    petersen = Graph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
         (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )
    assert girth(petersen) == 5


def test_admissibility_examples():
    rep = admissibility(cycle_graph(6))
    assert not rep.c6_free and rep.c6_witness is not None
    rep = admissibility(cycle_graph(7))
    assert rep.c6_free and rep.induced5_free and rep.induced6_free
    c5e = Graph(5, list(cycle_graph(5).edges) + [(0, 2)])
    rep = admissibility(c5e)
    assert rep.induced5_free and rep.c6_free


def test_rejects_short_lengths():
    with pytest.raises(ValueError):
        find_cycle_of_length(cycle_graph(4), 2)
    with pytest.raises(ValueError):
        find_induced_cycle_of_length(cycle_graph(4), 1)


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_detectors_match_bruteforce(g):
    for ln in range(3, g.n + 1):
        assert (find_cycle_of_length(g, ln) is not None) == brute_has_cycle(
            g, ln, induced=False
        )
        assert (
            find_induced_cycle_of_length(g, ln) is not None
        ) == brute_has_cycle(g, ln, induced=True)


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_induced_implies_plain_and_girth(g):
    lens_plain = [
        ln for ln in range(3, g.n + 1) if find_cycle_of_length(g, ln) is not None
    ]
    lens_induced = [
        ln
        for ln in range(3, g.n + 1)
        if find_induced_cycle_of_length(g, ln) is not None
    ]
    assert set(lens_induced) <= set(lens_plain)
    expect = min(lens_plain) if lens_plain else math.inf
    assert girth(g) == expect
    # a shortest cycle is chordless
    assert (min(lens_induced) if lens_induced else math.inf) == expect
