"""Extremal families, random admissible graphs, and small-graph catalogs.

The catalog enumerates connected graphs up to isomorphism by growing each
order from the previous one (every connected graph has a non-cut vertex, so
deleting it reaches order n-1) and deduplicating through a canonical form:
the minimum, over all vertex orderings, of the upper-triangle adjacency
bit-string.  The minimization is a depth-first search with prefix pruning,
which returns the same minimum the full 8! sweep would.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .graph import (
    Graph,
    Special,
    bfs_distance,
    cycle_graph,
    disjoint_union,
    is_connected,
    path_graph,
)
from .cycles import (
    admissibility,
    has_cycle_through_edge,
    has_induced_cycle_through_edge,
)
from .exact import is_isolating, OrderTooLarge

ENUMERATION_MAX_ORDER = 8

# How a gadget of each kind is laid out before joining: vertex 0 is the
# default join point.
_GADGET = {
    Special.P3: path_graph(3),
    Special.C3: cycle_graph(3),
    Special.C7: cycle_graph(7),
    Special.C11: cycle_graph(11),
}


class InadmissibleBackbone(ValueError):
    """The backbone graph fits neither forbidden-cycle class."""


class BadSpec(ValueError):
    """Malformed extremal-family description."""


# ---------------------------------------------------------------------------
# Canonical forms and exhaustive catalogs
# ---------------------------------------------------------------------------


def _certificate(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form: lexicographic minimum over all vertex orderings of
    the adjacency columns (bits toward earlier positions are more
    significant, i.e. upper-triangle column-major order)."""
    n = len(adj)
    if n <= 1:
        return ()
    best: tuple[int, ...] | None = None
    placed: list[int] = []
    cols: list[int] = []
    used = 0

    def rec() -> None:
        nonlocal best, used
        p = len(placed)
        if p == n:
            t = tuple(cols)
            if best is None or t < best:
                best = t
            return
        cand = []
        for v in range(n):
            if used >> v & 1:
                continue
            a = adj[v]
            c = 0
            for i, u in enumerate(placed):
                c |= ((a >> u) & 1) << (p - 1 - i)
            cand.append((c, v))
        cand.sort()
        for c, v in cand:
            if (
                best is not None
                and p >= 1
                and cols == list(best[: p - 1])
                and c > best[p - 1]
            ):
                break
            placed.append(v)
            used |= 1 << v
            if p >= 1:  # position 0 contributes no column
                cols.append(c)
            rec()
            if p >= 1:
                cols.pop()
            used ^= 1 << v
            placed.pop()

    rec()
    assert best is not None
    return best


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate of a graph (see _certificate)."""
    return _certificate(g.adj_bits)


def _graph_from_certificate(n: int, cert: tuple[int, ...]) -> Graph:
    pairs = []
    for j in range(1, n):
        col = cert[j - 1]
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                pairs.append((i, j))
    return Graph(n, pairs)


@lru_cache(maxsize=None)
def _connected_certs(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((),)
    seen: set[tuple[int, ...]] = set()
    new_bit = 1 << (n - 1)
    for cert in _connected_certs(n - 1):
        parent = _graph_from_certificate(n - 1, cert).adj_bits
        for s in range(1, 1 << (n - 1)):
            child = tuple(
                row | new_bit if s >> i & 1 else row
                for i, row in enumerate(parent)
            ) + (s,)
            seen.add(_certificate(child))
    return tuple(sorted(seen))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Deterministic order (sorted by canonical form).  Practical bound n <= 8.
    """
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_ORDER}")
    for cert in _connected_certs(n):
        yield _graph_from_certificate(n, cert)


def enumerate_all(n: int) -> Iterator[Graph]:
    """All graphs on n vertices up to isomorphism, disconnected included.

    A graph is a multiset of connected components, so distinct
    non-increasing sequences of catalog members with orders summing to n
    cover every isomorphism class exactly once.
    """
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_ORDER}")
    catalogs = {m: list(enumerate_connected(m)) for m in range(1, n + 1)}

    def parts(remaining: int, bound: tuple[int, int]) -> Iterator[list[tuple[int, int]]]:
        if remaining == 0:
            yield []
            return
        for order in range(min(remaining, bound[0]), 0, -1):
            top = bound[1] if order == bound[0] else len(catalogs[order]) - 1
            for idx in range(top, -1, -1):
                for rest in parts(remaining - order, (order, idx)):
                    yield [(order, idx)] + rest

    for combo in parts(n, (n, len(catalogs[n]) - 1)):
        yield disjoint_union([catalogs[o][i] for o, i in combo])


# ---------------------------------------------------------------------------
# Extremal family (backbone with pendant gadgets)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalSpec:
    """Backbone F plus one pendant gadget per backbone vertex.

    ``join_points[i]`` names the gadget vertex joined to backbone vertex i
    (default 0 for every gadget).  ``leaves`` (0..3) pendant vertices are
    attached to witness vertices to pad the order without changing the
    isolation number's quarter ratio.
    """

    backbone: Graph
    gadget_kinds: tuple[Special, ...]
    join_points: tuple[int, ...] | None = None
    leaves: int = 0


@dataclass(frozen=True)
class ExtremalInstance:
    graph: Graph
    designated_witness: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    spec: ExtremalSpec = field(compare=False)


def build_extremal(spec: ExtremalSpec) -> ExtremalInstance:
    """Assemble the tight-family instance and its designated witness.

    The witness takes the backbone vertex for P3/C3 gadgets, adds one
    distance-4 vertex for C7 and both distance-4 vertices for C11; it is
    re-verified 1-isolating before returning.
    """
    f = spec.backbone
    t = f.n
    if t < 1 or not is_connected(f):
        raise InadmissibleBackbone("backbone must be connected and non-empty")
    rep = admissibility(f)
    if not (rep.c6_free or (rep.induced5_free and rep.induced6_free)):
        raise InadmissibleBackbone(
            "backbone must avoid 6-cycles or avoid induced 5- and 6-cycles"
        )
    if len(spec.gadget_kinds) != t:
        raise BadSpec("need one gadget kind per backbone vertex")
    joins = spec.join_points or (0,) * t
    if len(joins) != t:
        raise BadSpec("need one join point per backbone vertex")
    if not 0 <= spec.leaves <= 3:
        raise BadSpec("leaves must be between 0 and 3")

    pairs = list(f.edges)
    witness: set[int] = set()
    blocks: list[frozenset[int]] = []
    offset = t
    block_meta = []
    for i, kind in enumerate(spec.gadget_kinds):
        gadget = _GADGET[kind]
        if not 0 <= joins[i] < gadget.n:
            raise BadSpec(f"join point {joins[i]} invalid for {kind.value}")
        pairs.extend((u + offset, v + offset) for u, v in gadget.edges)
        pairs.append((i, joins[i] + offset))
        blocks.append(frozenset({i} | {offset + u for u in range(gadget.n)}))
        block_meta.append((i, kind, offset, gadget.n))
        offset += gadget.n

    core_order = offset
    g_core = Graph(core_order, pairs)
    for i, kind, off, size in block_meta:
        witness.add(i)
        if kind in (Special.C7, Special.C11):
            dist = bfs_distance(g_core, i)
            far = sorted(
                v for v in range(off, off + size) if dist[v] == 4
            )
            witness.update(far if kind is Special.C11 else far[:1])

    # Pendant leaves go onto witness vertices, round-robin.
    anchors = sorted(witness)
    for j in range(spec.leaves):
        pairs.append((anchors[j % len(anchors)], core_order + j))
    g = Graph(core_order + spec.leaves, pairs)

    ok, _ = is_isolating(g, witness, 1)
    if not ok:
        raise AssertionError("designated witness failed verification")
    if 4 * len(witness) != core_order:
        raise AssertionError("witness size is not a quarter of the core order")
    return ExtremalInstance(g, frozenset(witness), tuple(blocks), spec)


# ---------------------------------------------------------------------------
# Random admissible graphs (rejection construction)
# ---------------------------------------------------------------------------

CLASS_C6_FREE = "c6_free"
CLASS_INDUCED56_FREE = "induced56_free"
CLASS_INDUCED6_FREE = "induced6_free"


def _edge_stays_admissible(g: Graph, u: int, v: int, cls: str) -> bool:
    # g already contains the candidate edge; the rest of the graph is clean,
    # so only cycles through (u, v) can break the class.
    if cls == CLASS_C6_FREE:
        return not has_cycle_through_edge(g, u, v, 6)
    if cls == CLASS_INDUCED56_FREE:
        return not (
            has_induced_cycle_through_edge(g, u, v, 5)
            or has_induced_cycle_through_edge(g, u, v, 6)
        )
    if cls == CLASS_INDUCED6_FREE:
        return not has_induced_cycle_through_edge(g, u, v, 6)
    raise ValueError(f"unknown class {cls!r}")


def _prufer_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaf_heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    for v in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaf_heap, v)
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def random_admissible(
    n: int, target_edges: int, cls: str, seed: int
) -> Graph:
    """Connected random graph in the forbidden-cycle class.

    Starts from a uniform random spanning tree (Pruefer sequence), then adds
    random edges, rejecting any insertion that creates a forbidden cycle.
    May stop short of ``target_edges`` after 50 * target_edges failed
    attempts; deterministic given the seed.  The construction is biased, not
    a uniform sample from the class.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = random.Random(seed)
    edges = set(tuple(sorted(e)) for e in _prufer_tree(n, rng))
    g = Graph(n, edges)
    stall_limit = 50 * max(target_edges, 1)
    fails = 0
    while len(edges) < target_edges and fails < stall_limit and n >= 2:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or tuple(sorted((u, v))) in edges:
            fails += 1
            continue
        trial = Graph(n, edges | {(u, v)})
        if _edge_stays_admissible(trial, u, v, cls):
            edges.add(tuple(sorted((u, v))))
            g = trial
        else:
            fails += 1
    return g
