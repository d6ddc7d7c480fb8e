import random

import pytest

from isoset import (
    ContainsForbiddenCycle,
    Graph,
    InternalCaseExhaustion,
    PreconditionViolation,
    Special,
    ExtremalSpec,
    build_extremal,
    construct_c6_free,
    construct_induced56_free,
    cycle_graph,
    is_isolating,
    isolating_set_path_or_cycle,
    isolation_number,
    partition_pivot,
    path_graph,
    random_admissible,
    special_cycle_fragment,
    special_kind,
    star_graph,
)
from isoset.constructive import InvalidKind
from isoset.generators import CLASS_C6_FREE, CLASS_INDUCED56_FREE

TRACKS = [
    (CLASS_C6_FREE, construct_c6_free),
    (CLASS_INDUCED56_FREE, construct_induced56_free),
]


def check(g, fn):
    witness, trace = fn(g)
    ok, _ = is_isolating(g, witness, 1)
    assert ok
    assert len(witness) <= g.n // 4
    assert trace.fragment_union() == witness
    assert not any(s.label.startswith("debug/") for s in trace.steps)
    return witness, trace


def test_paths_and_cycles_patterns():
    for n in range(1, 41):
        if n == 3:
            continue
        g = path_graph(n)
        w = isolating_set_path_or_cycle(g)
        ok, _ = is_isolating(g, w, 1)
        assert ok and len(w) <= n // 4
    for n in range(4, 41):
        if n in (6, 7, 11):
            continue
        g = cycle_graph(n)
        w = isolating_set_path_or_cycle(g)
        ok, _ = is_isolating(g, w, 1)
        assert ok and len(w) <= n // 4


def test_path_or_cycle_exclusions():
    for bad in (path_graph(3), cycle_graph(3), cycle_graph(6), cycle_graph(7),
                cycle_graph(11)):
        with pytest.raises(PreconditionViolation):
            isolating_set_path_or_cycle(bad)
    with pytest.raises(PreconditionViolation):
        isolating_set_path_or_cycle(star_graph(3))


def test_special_cycle_fragment():
    assert special_cycle_fragment(cycle_graph(7), 0) == {3}
    assert special_cycle_fragment(cycle_graph(11), 0) == {3, 8}
    assert special_cycle_fragment(path_graph(3), 0) == set()
    assert special_cycle_fragment(cycle_graph(3), 1) == set()
    with pytest.raises(InvalidKind):
        special_cycle_fragment(path_graph(4), 0)
    with pytest.raises(InvalidKind):
        special_cycle_fragment(cycle_graph(7), 9)


def test_partition_pivot_star_of_arms():
    # center with three arms of three vertices each
    g = Graph(13, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (2, 7),
                   (7, 8), (8, 9), (3, 10), (10, 11), (11, 12)])
    part = partition_pivot(g)
    assert part.pivot == 0
    assert part.k3 == 3 and part.k7 == part.k11 == 0
    assert len(part.h_b) == 3 and not part.h_g
    for x in (1, 2, 3):
        assert len(part.per_attachment[x][0]) == 1


def test_partition_pivot_preconditions():
    with pytest.raises(PreconditionViolation):
        partition_pivot(cycle_graph(7))  # max degree 2
    with pytest.raises(PreconditionViolation):
        partition_pivot(star_graph(4))  # dominating center


def test_construct_rejections():
    with pytest.raises(PreconditionViolation):
        construct_c6_free(cycle_graph(3))
    with pytest.raises(ContainsForbiddenCycle):
        construct_c6_free(cycle_graph(6))
    with pytest.raises(ContainsForbiddenCycle):
        construct_induced56_free(cycle_graph(5))
    two = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionViolation):
        construct_c6_free(two)


def test_chorded_c5_is_fine_for_induced_track():
    g = Graph(5, list(cycle_graph(5).edges) + [(0, 2)])
    w, _ = check(g, construct_induced56_free)
    assert len(w) == 1


def test_small_cases_and_extremals():
    w, tr = check(cycle_graph(5), construct_c6_free)
    assert len(w) == 1 and tr.labels() == ("c6free/path-or-cycle",)

    fig = build_extremal(
        ExtremalSpec(path_graph(4), (Special.C7, Special.P3, Special.P3,
                                     Special.C11))
    )
    assert fig.graph.n == 28
    w, _ = check(fig.graph, construct_c6_free)
    assert len(w) == 7
    w, _ = check(fig.graph, construct_induced56_free)
    assert len(w) == 7


def test_deterministic():
    g = random_admissible(30, 40, CLASS_C6_FREE, seed=11)
    w1, t1 = construct_c6_free(g)
    w2, t2 = construct_c6_free(g)
    assert w1 == w2 and t1 == t2


def test_random_corpora_both_tracks():
    rng = random.Random(2024)
    for cls, fn in TRACKS:
        for i in range(60):
            n = rng.randint(4, 40)
            g = random_admissible(n, rng.randint(n - 1, n + n // 2), cls,
                                  seed=9000 + i)
            if special_kind(g) is not None:
                continue
            check(g, fn)


def test_never_beats_exact_small():
    rng = random.Random(5)
    for cls, fn in TRACKS:
        for i in range(40):
            n = rng.randint(4, 12)
            g = random_admissible(n, rng.randint(n - 1, n + 4), cls, seed=100 + i)
            if special_kind(g) is not None:
                continue
            w, _ = check(g, fn)
            assert len(w) >= isolation_number(g, 1).size


def test_debug_fallback_is_recorded():
    # force the flag on a normal instance: the flag alone must not alter a
    # successful run
    g = random_admissible(20, 25, CLASS_C6_FREE, seed=3)
    w, tr = construct_c6_free(g, debug_fallback=True)
    assert not any(s.label.startswith("debug/") for s in tr.steps)


def test_exhaustion_carries_context():
    err = InternalCaseExhaustion("boom", cycle_graph(4), ())
    assert "n=4" in str(err)
    assert err.trace.steps == ()


LABEL_PREFIXES = (
    "tiny",
    "path-or-cycle",
    "dominating-pivot",
    "all-components-generic",
    "pendant-cluster/",
    "lone-attach/",
    "cluster-bound/",
    "deg3/",
    "deg4/",
)


def test_trace_labels_come_from_documented_vocabulary():
    rng = random.Random(31)
    for cls, fn in TRACKS:
        track = "c6free" if cls == CLASS_C6_FREE else "ind56free"
        for i in range(40):
            n = rng.randint(4, 35)
            g = random_admissible(n, rng.randint(n - 1, n + 8), cls, seed=i)
            if special_kind(g) is not None:
                continue
            _, trace = fn(g)
            for label in trace.labels():
                head, _, rest = label.partition("/")
                assert head == track
                assert rest.startswith(LABEL_PREFIXES), label
