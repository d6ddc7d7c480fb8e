"""Immutable simple undirected graphs on dense vertex ids 0..n-1.

Everything downstream (cycle detectors, the exact solver, the certified
constructions) consumes this representation.  Subgraph operations return a
relabel map (new id -> original id) so witnesses computed on a subgraph can
be lifted back to the original graph.  Adjacency is kept both as sorted
tuples (public) and as per-vertex bitmasks (fast set arithmetic).
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, Iterator


class EndpointOutOfRange(ValueError):
    """An edge endpoint lies outside [0, n)."""


class SelfLoop(ValueError):
    """An edge joins a vertex to itself."""


class EmptyGraph(ValueError):
    """The operation needs at least one vertex."""


class Special(Enum):
    """The four connected graphs whose smallest 1-isolating set exceeds a
    quarter of their order; they are special-cased throughout."""

    P3 = "P3"
    C3 = "C3"
    C7 = "C7"
    C11 = "C11"


class Graph:
    """Simple undirected graph, immutable after construction.

    No self-loops, no parallel edges; adjacency is symmetric by
    construction.
    """

    __slots__ = ("n", "adj", "adj_bits", "_edges")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        bits = [0] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise EndpointOutOfRange(f"edge ({u},{v}) outside [0,{n})")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.adj_bits = tuple(bits)
        self.adj = tuple(tuple(_iter_bits(b)) for b in bits)
        self._edges = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )

    # -- basic queries ---------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def vertices(self) -> range:
        return range(self.n)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(b.bit_count() for b in self.adj_bits))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj_bits == other.adj_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def set_of(mask: int) -> frozenset[int]:
    return frozenset(_iter_bits(mask))


# -- construction ----------------------------------------------------------


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting out-of-range endpoints and self-loops.

    Duplicate pairs (in either orientation) collapse to a single edge.
    """
    return Graph(n, pairs)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    parts = list(graphs)
    n = sum(g.n for g in parts)
    pairs = []
    off = 0
    for g in parts:
        pairs.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(n, pairs)


# -- neighborhoods and deletion --------------------------------------------


def _check_subset(g: Graph, d: Iterable[int]) -> frozenset[int]:
    s = frozenset(d)
    for v in s:
        if not 0 <= v < g.n:
            raise EndpointOutOfRange(f"vertex {v} outside [0,{g.n})")
    return s


def closed_neighborhood(g: Graph, d: Iterable[int]) -> frozenset[int]:
    """N[d]: the vertices of d together with everything adjacent to d."""
    return set_of(closed_neighborhood_bits(g, _check_subset(g, d)))


def closed_neighborhood_bits(g: Graph, d: Iterable[int]) -> int:
    mask = 0
    for v in d:
        mask |= 1 << v | g.adj_bits[v]
    return mask


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced on ``keep`` plus the relabel map new id -> old id.

    New ids follow the sorted order of the kept original ids.
    """
    order = tuple(sorted(_check_subset(g, keep)))
    index = {old: new for new, old in enumerate(order)}
    pairs = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(order), pairs), order


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    dropped = _check_subset(g, drop)
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def delete_closed_neighborhood(
    g: Graph, d: Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """G - N[d] with the relabel map back to original ids."""
    return delete_vertices(g, closed_neighborhood(g, d))


# -- components, degrees, distances -----------------------------------------


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as induced subgraphs with relabel maps.

    Deterministic: components are ordered by their smallest original vertex
    id, and vertices within a component keep the sorted-id order.
    """
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = [s]
        while frontier:
            u = frontier.pop()
            fresh = g.adj_bits[u] & ~comp
            comp |= fresh
            frontier.extend(_iter_bits(fresh))
        seen |= comp
        out.append(induced_subgraph(g, _iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    reach = 1
    frontier = [0]
    while frontier:
        u = frontier.pop()
        fresh = g.adj_bits[u] & ~reach
        reach |= fresh
        frontier.extend(_iter_bits(fresh))
    return reach == (1 << g.n) - 1


def max_degree(g: Graph) -> tuple[int, int]:
    """(max degree, the smallest vertex id achieving it)."""
    if g.n == 0:
        raise EmptyGraph("max_degree of the empty graph")
    best_d, best_v = -1, -1
    for v in range(g.n):
        d = g.adj_bits[v].bit_count()
        if d > best_d:
            best_d, best_v = d, v
    return best_d, best_v


def bfs_distance(g: Graph, source: int) -> list[float]:
    """Unweighted shortest-path distances from ``source``; inf = unreachable."""
    if not 0 <= source < g.n:
        raise EndpointOutOfRange(f"source {source} outside [0,{g.n})")
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] == math.inf:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def special_kind(g: Graph) -> Special | None:
    """Classify a graph against the four special shapes, None otherwise.

    Order, connectivity and the degree sequence pin each shape down exactly:
    P3 is the only connected 3-vertex graph with degree sequence (1,1,2),
    C3/C7/C11 are the only connected 2-regular graphs of their orders.
    """
    n = g.n
    if n == 3 and is_connected(g):
        seq = g.degree_sequence()
        if seq == (1, 1, 2):
            return Special.P3
        if seq == (2, 2, 2):
            return Special.C3
    if n in (7, 11) and is_connected(g) and g.degree_sequence() == (2,) * n:
        return Special.C7 if n == 7 else Special.C11
    return None
