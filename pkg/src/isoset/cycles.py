"""Exact detection of fixed-length cycles and chordless (induced) cycles.

The searches are exhaustive DFS with a canonical start: a reported cycle is
rooted at its minimum vertex and oriented so the second vertex is smaller
than the last, so each cycle is visited once.  Exactness matters more than
speed here; the lengths of interest are 5 and 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class CycleWitness:
    """A concrete cycle: consecutive vertices (cyclically) are edges."""

    vertices: tuple[int, ...]
    induced: bool


@dataclass(frozen=True)
class AdmissibilityReport:
    """Which forbidden-cycle classes a graph belongs to, with witnesses for
    every violated property."""

    c6_free: bool
    induced5_free: bool
    induced6_free: bool
    c6_witness: CycleWitness | None = None
    induced5_witness: CycleWitness | None = None
    induced6_witness: CycleWitness | None = None


def _is_induced_cycle(g: Graph, cyc: tuple[int, ...]) -> bool:
    k = len(cyc)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if not consecutive and g.has_edge(cyc[i], cyc[j]):
                return False
    return True


def find_cycle_of_length(g: Graph, length: int) -> CycleWitness | None:
    """Some (not necessarily induced) cycle on exactly ``length`` vertices.

    Returns None when no such cycle exists.
    """
    if length < 3:
        raise ValueError("cycles have length at least 3")
    if length > g.n:
        return None
    adj_bits = g.adj_bits

    for s in range(g.n):
        path = [s]
        onpath = 1 << s

        def dfs() -> tuple[int, ...] | None:
            nonlocal onpath
            last = path[-1]
            if len(path) == length:
                if adj_bits[last] >> s & 1 and path[1] < path[-1]:
                    return tuple(path)
                return None
            for w in g.adj[last]:
                if w <= s or onpath >> w & 1:
                    continue
                path.append(w)
                onpath |= 1 << w
                found = dfs()
                if found is not None:
                    return found
                path.pop()
                onpath ^= 1 << w
            return None

        cyc = dfs()
        if cyc is not None:
            return CycleWitness(cyc, _is_induced_cycle(g, cyc))
    return None


def find_induced_cycle_of_length(g: Graph, length: int) -> CycleWitness | None:
    """Some chordless cycle on exactly ``length`` vertices, or None."""
    if length < 3:
        raise ValueError("cycles have length at least 3")
    if length > g.n:
        return None
    adj_bits = g.adj_bits

    if length == 3:
        for s in range(g.n):
            for a in g.adj[s]:
                if a <= s:
                    continue
                both = adj_bits[s] & adj_bits[a]
                both >>= a + 1
                if both:
                    b = a + 1 + (both & -both).bit_length() - 1
                    return CycleWitness((s, a, b), True)
        return None

    for s in range(g.n):
        path = [s]
        onpath = 1 << s

        def dfs() -> tuple[int, ...] | None:
            nonlocal onpath
            last = path[-1]
            closing = len(path) == length - 1
            for w in g.adj[last]:
                if w <= s or onpath >> w & 1:
                    continue
                # Chordless: w may touch the path only at its predecessor,
                # plus the root exactly when it closes the cycle.
                need = 1 << last
                if closing:
                    need |= 1 << s
                if adj_bits[w] & onpath != need:
                    continue
                if closing:
                    if path[1] < w:
                        return tuple(path) + (w,)
                    continue
                path.append(w)
                onpath |= 1 << w
                found = dfs()
                if found is not None:
                    return found
                path.pop()
                onpath ^= 1 << w
            return None

        cyc = dfs()
        if cyc is not None:
            return CycleWitness(cyc, True)
    return None


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex; a non-tree edge seen from u to an already
    visited w closes a cycle of length dist[u] + dist[w] + 1.  The minimum
    over all roots is the exact girth.
    """
    best: int | float = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def has_cycle_through_edge(g: Graph, u: int, v: int, length: int) -> bool:
    """Is there a cycle of exactly ``length`` vertices using edge (u, v)?

    Used by the rejection generators: when the rest of the graph is already
    clean, any new forbidden cycle must pass through the edge just added.
    """
    steps_needed = length - 1  # path u .. v avoiding the direct edge
    onpath = 1 << u

    def dfs(last: int, steps: int) -> bool:
        nonlocal onpath
        if steps == steps_needed - 1:
            return bool(g.adj_bits[last] >> v & 1)
        for w in g.adj[last]:
            if w == v or onpath >> w & 1:
                continue
            onpath |= 1 << w
            hit = dfs(w, steps + 1)
            onpath ^= 1 << w
            if hit:
                return True
        return False

    if length < 3:
        raise ValueError("cycles have length at least 3")
    return dfs(u, 0)


def has_induced_cycle_through_edge(g: Graph, u: int, v: int, length: int) -> bool:
    """Is there a chordless cycle of exactly ``length`` vertices on edge (u, v)?"""
    adj_bits = g.adj_bits
    if length == 3:
        return bool(adj_bits[u] & adj_bits[v])
    vbit = 1 << v
    onpath = 1 << u

    def dfs(last: int, steps: int) -> bool:
        nonlocal onpath
        closing = steps == length - 2
        for w in g.adj[last]:
            if w == v or onpath >> w & 1:
                continue
            need = 1 << last
            if closing:
                need |= vbit
            if adj_bits[w] & (onpath | vbit) != need:
                continue
            if closing:
                return True
            onpath |= 1 << w
            hit = dfs(w, steps + 1)
            onpath ^= 1 << w
            if hit:
                return True
        return False

    return dfs(u, 1)


def admissibility(g: Graph) -> AdmissibilityReport:
    """All three forbidden-cycle flags, each with a witness when violated."""
    c6 = find_cycle_of_length(g, 6) if g.n >= 6 else None
    i5 = find_induced_cycle_of_length(g, 5) if g.n >= 5 else None
    i6 = find_induced_cycle_of_length(g, 6) if g.n >= 6 else None
    return AdmissibilityReport(
        c6_free=c6 is None,
        induced5_free=i5 is None,
        induced6_free=i6 is None,
        c6_witness=c6,
        induced5_witness=i5,
        induced6_witness=i6,
    )
