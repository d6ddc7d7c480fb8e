"""Verification and exact computation of isolation numbers.

A set D is k-isolating when the graph left after deleting the closed
neighborhood N[D] has maximum degree at most k.  The exact solver works per
connected component (the objective is additive over components) and runs an
iterative-deepening branch and bound seeded by a greedy upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    closed_neighborhood_bits,
    components,
    _check_subset,
    _iter_bits,
)


class OrderTooLarge(ValueError):
    """The brute-force oracle refuses graphs past its practical bound."""


@dataclass(frozen=True)
class IsolationCertificate:
    """A k-isolating set together with what verifying it found."""

    k: int
    witness: frozenset[int]
    size: int
    residual_max_degree: int
    optimal: bool

    def __post_init__(self):
        if self.size != len(self.witness):
            raise ValueError("size disagrees with witness")
        if self.residual_max_degree > self.k:
            raise ValueError("certificate does not isolate")


def residual_bits(g: Graph, d_mask: int) -> int:
    """Bitmask of the vertices surviving the deletion of N[d]."""
    nd = d_mask
    for v in _iter_bits(d_mask):
        nd |= g.adj_bits[v]
    return ((1 << g.n) - 1) & ~nd


def _residual_max_degree(g: Graph, d_mask: int) -> int:
    resid = residual_bits(g, d_mask)
    best = 0
    for v in _iter_bits(resid):
        deg = (g.adj_bits[v] & resid).bit_count()
        if deg > best:
            best = deg
    return best


def is_isolating(g: Graph, d, k: int) -> tuple[bool, int]:
    """(is d k-isolating, max degree of the residual graph).

    The residual degree is 0 when nothing survives.
    """
    mask = 0
    for v in _check_subset(g, d):
        mask |= 1 << v
    rd = _residual_max_degree(g, mask)
    return rd <= k, rd


def greedy_isolating_set(g: Graph, k: int) -> IsolationCertificate:
    """A valid (rarely optimal) k-isolating set, used to seed the search.

    Repeatedly adds the vertex whose closed neighborhood covers the most
    currently worst-violating vertices; ties break to the smallest id.
    """
    d_mask = 0
    while True:
        resid = residual_bits(g, d_mask)
        worst, worst_set = k, 0
        for v in _iter_bits(resid):
            deg = (g.adj_bits[v] & resid).bit_count()
            if deg > worst:
                worst, worst_set = deg, 1 << v
            elif deg == worst and worst > k:
                worst_set |= 1 << v
        if worst <= k:
            break
        best_v, best_cover = -1, -1
        for v in range(g.n):
            cover = ((g.adj_bits[v] | 1 << v) & worst_set).bit_count()
            if cover > best_cover:
                best_v, best_cover = v, cover
        d_mask |= 1 << best_v
    witness = frozenset(_iter_bits(d_mask))
    return IsolationCertificate(
        k, witness, len(witness), _residual_max_degree(g, d_mask), optimal=False
    )


def _distance4_balls(g: Graph) -> list[int]:
    balls = []
    for v in range(g.n):
        ball = 1 << v
        for _ in range(4):
            grown = ball
            for u in _iter_bits(ball):
                grown |= g.adj_bits[u]
            ball = grown
        balls.append(ball)
    return balls


def _packing_lower_bound(violators: int, balls: list[int]) -> int:
    # Violators pairwise at distance >= 5 cannot share a fixing vertex.
    count = 0
    left = violators
    while left:
        v = (left & -left).bit_length() - 1
        count += 1
        left &= ~balls[v]
    return count


def _solve_component(g: Graph, k: int) -> int:
    """Minimum k-isolating set of a (small) graph, as a bitmask.

    Iterative deepening on the witness size.  Branching fixes the smallest
    vertex of maximum residual violation; any extension must pick a vertex
    whose closed neighborhood meets that vertex or one of its surviving
    neighbors, so only those candidates are tried.  Candidates already
    rejected along a branch stay excluded below it.
    """
    adj = g.adj_bits
    if _residual_max_degree(g, 0) <= k:
        return 0
    ub_mask = 0
    for v in greedy_isolating_set(g, k).witness:
        ub_mask |= 1 << v
    balls = _distance4_balls(g)

    def violators(resid: int) -> tuple[int, int]:
        worst_v, worst_d, all_mask = -1, k, 0
        for v in _iter_bits(resid):
            deg = (adj[v] & resid).bit_count()
            if deg > k:
                all_mask |= 1 << v
                if deg > worst_d:
                    worst_v, worst_d = v, deg
        return worst_v, all_mask

    def dfs(d_mask: int, banned: int, budget: int) -> int | None:
        resid = residual_bits(g, d_mask)
        worst, viol = violators(resid)
        if worst < 0:
            return d_mask
        if budget == 0 or _packing_lower_bound(viol, balls) > budget:
            return None
        cands = adj[worst] | 1 << worst
        for z in _iter_bits(adj[worst] & resid):
            cands |= adj[z] | 1 << z
        cands &= ~banned
        for w in _iter_bits(cands):
            found = dfs(d_mask | 1 << w, banned, budget - 1)
            if found is not None:
                return found
            banned |= 1 << w
        return None

    start = _packing_lower_bound(violators(residual_bits(g, 0))[1], balls)
    for size in range(start, ub_mask.bit_count()):
        found = dfs(0, 0, size)
        if found is not None:
            return found
    return ub_mask


def isolation_number(g: Graph, k: int) -> IsolationCertificate:
    """Optimal certificate for the smallest k-isolating set.

    Handles empty and disconnected graphs; the optimum is computed per
    connected component and the witnesses are unioned.
    """
    if g.n == 0:
        return IsolationCertificate(k, frozenset(), 0, 0, optimal=True)
    witness: set[int] = set()
    for comp, back in components(g):
        mask = _solve_component(comp, k)
        witness.update(back[v] for v in _iter_bits(mask))
    d_mask = 0
    for v in witness:
        d_mask |= 1 << v
    return IsolationCertificate(
        k,
        frozenset(witness),
        len(witness),
        _residual_max_degree(g, d_mask),
        optimal=True,
    )


def isolation_number_bruteforce(
    g: Graph, k: int, max_order: int = 20
) -> IsolationCertificate:
    """Independent oracle: plain subset enumeration by increasing size."""
    if g.n > max_order:
        raise OrderTooLarge(f"brute force capped at order {max_order}")
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            rd = _residual_max_degree(g, mask)
            if rd <= k:
                return IsolationCertificate(
                    k, frozenset(combo), size, rd, optimal=True
                )
    raise AssertionError("unreachable: the full vertex set always isolates")


def compose_check(g: Graph, region, d, k: int = 1) -> bool:
    """Decomposition hypothesis: d k-isolates the subgraph induced on
    ``region`` and no edge leaves region from a vertex of region outside
    N[d].

    When this holds, a witness for the rest of the graph simply unions with
    d.  Verbatim form of the splitting rule; the constructive solver uses a
    sharper internal variant.
    """
    region = _check_subset(g, region)
    d = _check_subset(g, d)
    if not d <= region:
        raise ValueError("d must be a subset of region")
    region_mask = 0
    for v in region:
        region_mask |= 1 << v
    d_mask = 0
    for v in d:
        d_mask |= 1 << v
    nd = closed_neighborhood_bits(g, d)
    resid_in_region = region_mask & ~nd
    for v in _iter_bits(resid_in_region):
        if (g.adj_bits[v] & resid_in_region).bit_count() > k:
            return False
        if g.adj_bits[v] & ~region_mask:
            return False
    return True
