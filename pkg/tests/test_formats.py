import random

import pytest

from isoset import Graph, cycle_graph, path_graph
from isoset.formats import (
    ParseError,
    from_edge_list_text,
    from_graph6,
    read_graph_file,
    to_edge_list,
    to_graph6,
    write_edge_list,
    write_graph6,
)


def random_graph(rng, n):
    return Graph(
        n,
        [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.4
        ],
    )


def test_edge_list_roundtrip():
    rng = random.Random(1)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        assert from_edge_list_text(to_edge_list(g)) == g


def test_edge_list_comments_and_errors():
    g = from_edge_list_text("# a triangle\n3 3\n0 1\n1 2\n# middle\n2 0\n")
    assert g == cycle_graph(3)
    with pytest.raises(ParseError):
        from_edge_list_text("")
    with pytest.raises(ParseError):
        from_edge_list_text("3 2\n0 1\n")
    with pytest.raises(ParseError):
        from_edge_list_text("2 1\n0 3\n")


def test_graph6_roundtrip_and_header():
    rng = random.Random(2)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 20))
        assert from_graph6(to_graph6(g)) == g
    assert from_graph6(">>graph6<<" + to_graph6(path_graph(4))) == path_graph(4)


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 15))
        h = nx.Graph()
        h.add_nodes_from(range(g.n))  # node order fixes the matrix order
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == theirs
        assert from_graph6(theirs) == g


def test_graph6_errors():
    with pytest.raises(ParseError):
        from_graph6("")
    with pytest.raises(ParseError):
        from_graph6(chr(63 + 63))  # n too large for the short form
    with pytest.raises(ParseError):
        from_graph6(to_graph6(cycle_graph(8))[:-1])


def test_read_graph_file_detection(tmp_path):
    p1 = tmp_path / "one.txt"
    write_edge_list(cycle_graph(5), p1)
    [(label, g)] = read_graph_file(p1)
    assert g == cycle_graph(5)

    p2 = tmp_path / "many.g6"
    graphs = [cycle_graph(4), path_graph(6), cycle_graph(7)]
    write_graph6(graphs, p2)
    parsed = read_graph_file(p2)
    assert [g for _, g in parsed] == graphs

    p3 = tmp_path / "hdr.g6"
    p3.write_text(">>graph6<<\n" + to_graph6(cycle_graph(5)) + "\n")
    [(label, g)] = read_graph_file(p3)
    assert g == cycle_graph(5)

    with pytest.raises(ParseError):
        read_graph_file(tmp_path / "missing.txt")
