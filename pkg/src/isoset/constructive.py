"""Certified construction of 1-isolating sets of size at most floor(n/4).

Two tracks, one per forbidden-cycle class: connected graphs without
6-cycles, and connected graphs without induced 5- and 6-cycles, in both
cases excluding the four special graphs P3, C3, C7, C11.  The construction
follows the inductive bound argument case by case: pick a maximum-degree
pivot, split off the special components hanging below it, place an explicit
witness fragment on the split-off region, and recurse on what remains.

Every fragment is re-verified against the actual edge set before it is
used, and the final witness is re-checked, so the math is never trusted
blindly: a configuration no branch can serve raises InternalCaseExhaustion
(which on admissible inputs indicates an implementation bug, never a user
error).

Trace labels used by the case machinery (CaseTrace.steps):

    <track>/tiny                        order <= 3, empty witness
    <track>/path-or-cycle               max degree <= 2
    <track>/dominating-pivot            pivot adjacent to everything
    <track>/all-components-generic      no special component below the pivot
    <track>/pendant-cluster/...         special components hanging on a
                                        single attachment vertex
    c6free/lone-attach/...              doubly-attached special component:
                                        generic-main, bridge,
                                        pivot-redirect, small/<h>-<gv>
    ind56free/cluster-bound/...         one-per-block, attach-cover,
                                        shared-attach
    ind56free/deg3/...  ind56free/deg4/...   finite degree-3/degree-4 tables
    debug/fallback-exact                only with debug_fallback=True

where <track> is c6free or ind56free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    Special,
    bits_of,
    closed_neighborhood_bits,
    components,
    delete_vertices,
    induced_subgraph,
    is_connected,
    max_degree,
    special_kind,
    _iter_bits,
)
from .cycles import admissibility
from .exact import is_isolating, isolation_number

TRACK_C6 = "c6free"
TRACK_IND56 = "ind56free"


class PreconditionViolation(ValueError):
    """The input is outside the track's graph class."""


class ContainsForbiddenCycle(PreconditionViolation):
    """The input has a cycle the track forbids; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidKind(ValueError):
    """The graph is not one of the four special shapes."""


class InternalCaseExhaustion(RuntimeError):
    """No proof branch applies: an implementation bug, reported loudly with
    the partial trace and the offending subgraph."""

    def __init__(self, message: str, g: Graph | None = None, steps=()):
        dump = ""
        if g is not None:
            dump = f" [n={g.n} edges={list(g.edges)}]"
        super().__init__(message + dump)
        self.graph = g
        self.trace = CaseTrace(tuple(steps))


@dataclass(frozen=True)
class TraceStep:
    """One decision of the case machinery: which case fired and which
    vertices (original ids) it contributed to the witness."""

    label: str
    fragment: tuple[int, ...]
    note: str = ""


@dataclass(frozen=True)
class CaseTrace:
    steps: tuple[TraceStep, ...]

    def fragment_union(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.steps:
            out.update(s.fragment)
        return frozenset(out)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.steps)


@dataclass(frozen=True)
class ComponentPartition:
    """Decomposition of a connected graph at a maximum-degree pivot.

    ``components`` lists the components of G - N[pivot] with relabel maps;
    ``h_b`` / ``h_g`` index the special / non-special ones; ``attachments``
    gives, per component, its neighbors among N(pivot); ``per_attachment``
    maps each x in N(pivot) to the components whose whole attachment is
    exactly {x}.  k3 counts the P3 and C3 members of h_b, k7 and k11 the
    two cycle kinds.
    """

    pivot: int
    components: tuple[tuple[Graph, tuple[int, ...]], ...]
    kinds: tuple[Special | None, ...]
    attachments: tuple[frozenset[int], ...]
    h_b: tuple[int, ...]
    h_g: tuple[int, ...]
    per_attachment: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(
        hash=False, default_factory=dict
    )
    k3: int = 0
    k7: int = 0
    k11: int = 0


def _partition_at(g: Graph, pivot: int) -> ComponentPartition:
    nbhd = closed_neighborhood_bits(g, (pivot,))
    rest, back = delete_vertices(g, _iter_bits(nbhd))
    comps = []
    kinds = []
    attach = []
    for comp, cback in components(rest):
        full_back = tuple(back[c] for c in cback)
        comps.append((comp, full_back))
        kinds.append(special_kind(comp))
        verts = bits_of(full_back)
        attach.append(
            frozenset(x for x in g.adj[pivot] if g.adj_bits[x] & verts)
        )
    h_b = tuple(i for i, k in enumerate(kinds) if k is not None)
    h_g = tuple(i for i, k in enumerate(kinds) if k is None)
    per = {}
    for x in g.adj[pivot]:
        per[x] = (
            tuple(i for i in h_b if attach[i] == {x}),
            tuple(i for i in h_g if attach[i] == {x}),
        )
    return ComponentPartition(
        pivot,
        tuple(comps),
        tuple(kinds),
        tuple(attach),
        h_b,
        h_g,
        per,
        k3=sum(1 for i in h_b if kinds[i] in (Special.P3, Special.C3)),
        k7=sum(1 for i in h_b if kinds[i] is Special.C7),
        k11=sum(1 for i in h_b if kinds[i] is Special.C11),
    )


def partition_pivot(g: Graph) -> ComponentPartition:
    """Decompose at the smallest maximum-degree vertex.

    Requires a connected graph with 3 <= max degree <= n - 2.
    """
    if not is_connected(g):
        raise PreconditionViolation("graph must be connected")
    delta, v = max_degree(g)
    if not 3 <= delta <= g.n - 2:
        raise PreconditionViolation("need 3 <= max degree <= n - 2")
    return _partition_at(g, v)


# ---------------------------------------------------------------------------
# Building blocks: paths/cycles and special-component fragments
# ---------------------------------------------------------------------------


def isolating_set_path_or_cycle(g: Graph) -> frozenset[int]:
    """1-isolating set of size <= floor(n/4) for paths and cycles.

    Excluded inputs (P3, C3, C6, C7, C11) raise PreconditionViolation; for
    them no such set exists.  Paths take every fourth vertex along the
    path; cycles space witnesses four apart, with the seam repaired for
    orders 2 and 3 mod 4.  The returned set is re-verified.
    """
    n = g.n
    if n == 0 or not is_connected(g):
        raise PreconditionViolation("need a connected non-empty graph")
    if any(g.degree(v) > 2 for v in range(n)):
        raise PreconditionViolation("not a path or a cycle")
    if special_kind(g) is not None or (n == 6 and g.m == 6):
        raise PreconditionViolation(
            "P3, C3, C6, C7 and C11 admit no witness within the bound"
        )

    if n >= 3 and g.m == n:  # cycle: walk it starting at vertex 0
        order = [0, g.adj[0][0]]
        while len(order) < n:
            a, b = g.adj[order[-1]]
            order.append(b if a == order[-2] else a)
        k, r = divmod(n, 4)
        if r in (0, 1):
            positions = list(range(0, 4 * k, 4))
        elif r == 2:
            positions = list(range(0, 4 * k - 7, 4)) + [4 * k - 3]
        else:
            positions = [0, 5, 10] + [10 + 4 * j for j in range(1, k - 2)]
        witness = frozenset(order[p] for p in positions)
    elif n == 1:
        witness = frozenset()
    else:  # path, ordered from its smaller endpoint
        start = min(v for v in range(n) if g.degree(v) == 1)
        order = [start]
        prev = -1
        while len(order) < n:
            nxt = [w for w in g.adj[order[-1]] if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        witness = frozenset(order[p] for p in range(3, n, 4))

    ok, _ = is_isolating(g, witness, 1)
    if not ok or len(witness) > n // 4:
        raise InternalCaseExhaustion("path/cycle pattern failed verification", g)
    return witness


class _SL:
    """Distance labels around a special component, seen from a root vertex.

    ``one``/``two`` walk the two directions; for a P3 rooted at an endpoint
    ``one`` holds [middle, far endpoint] and ``two`` is empty.
    """

    __slots__ = ("root", "one", "two")

    def __init__(self, root: int, one: list[int], two: list[int]):
        self.root = root
        self.one = one
        self.two = two

    def flipped(self) -> "_SL":
        return _SL(self.root, self.two, self.one)


def _walk_labels(
    g: Graph, verts: set[int], root: int, first: int | None = None
) -> _SL:
    nbrs = sorted(w for w in g.adj[root] if w in verts)
    if len(nbrs) == 1:  # endpoint of a P3
        middle = nbrs[0]
        far = [w for w in g.adj[middle] if w in verts and w != root]
        return _SL(root, [middle] + far, [])
    a, b = nbrs
    if first is not None:
        a, b = first, (a if b == first else b)

    def walk(start: int) -> list[int]:
        out = [start]
        prev = root
        while True:
            nxt = [w for w in g.adj[out[-1]] if w in verts and w != prev]
            if not nxt or nxt[0] == root:
                break
            prev = out[-1]
            out.append(nxt[0])
        return out

    half = (len(verts) - 1) // 2
    return _SL(root, walk(a)[:half], walk(b)[:half])


def special_cycle_fragment(h: Graph, attach: int) -> frozenset[int]:
    """Witness fragment internal to a special component, seen from the
    vertex ``attach`` that the outside connects to.

    Empty for P3/C3; the smaller distance-3 vertex for C7; both distance-3
    vertices for C11.  The caller contributes the outside attachment
    vertex itself.
    """
    kind = special_kind(h)
    if kind is None:
        raise InvalidKind("not one of the special shapes")
    if not 0 <= attach < h.n:
        raise InvalidKind(f"vertex {attach} not in the component")
    if kind in (Special.P3, Special.C3):
        return frozenset()
    lab = _walk_labels(h, set(range(h.n)), attach)
    if kind is Special.C7:
        return frozenset({min(lab.one[2], lab.two[2])})
    return frozenset({lab.one[2], lab.two[2]})


def _first_cross_edge(g: Graph, yl: _SL, vl: _SL):
    """Depth-1 edge between the two labelings, normalized so it joins
    one[0] to one[0]; None when absent.  Both labelings need two arms."""
    for ys in (False, True):
        ya = (yl.two if ys else yl.one)[0]
        for vs in (False, True):
            va = (vl.two if vs else vl.one)[0]
            if g.has_edge(ya, va):
                return (
                    yl.flipped() if ys else yl,
                    vl.flipped() if vs else vl,
                )
    return None


# ---------------------------------------------------------------------------
# Shared machinery
# ---------------------------------------------------------------------------


@dataclass
class _Env:
    track: str
    debug_fallback: bool = False


def _step(env: _Env, label: str, fragment, note: str = "") -> TraceStep:
    return TraceStep(f"{env.track}/{label}", tuple(sorted(fragment)), note)


def _fail(env: _Env, msg: str, g: Graph, steps=()) -> InternalCaseExhaustion:
    return InternalCaseExhaustion(f"{env.track}: {msg}", g, steps)


def _fragment_ok(g: Graph, region_mask: int, frag) -> bool:
    """Sharp composition check: the fragment 1-isolates the region, and
    every edge out of a surviving region vertex lands inside N[fragment]."""
    nd = closed_neighborhood_bits(g, frag)
    resid = region_mask & ~nd
    outside = ((1 << g.n) - 1) & ~region_mask & ~nd
    for v in _iter_bits(resid):
        if (g.adj_bits[v] & resid).bit_count() > 1:
            return False
        if g.adj_bits[v] & outside:
            return False
    return True


def _lift_steps(steps: list[TraceStep], back: tuple[int, ...]) -> list[TraceStep]:
    return [
        TraceStep(s.label, tuple(sorted(back[v] for v in s.fragment)), s.note)
        for s in steps
    ]


def _solve_sub(env: _Env, sub: Graph, back: tuple[int, ...], out: set, steps: list):
    """Solve a subgraph the argument guarantees is not special; lift the
    witness and trace into the caller's vertex ids."""
    if special_kind(sub) is not None:
        raise _fail(env, "recursion hit a special component", sub, steps)
    w, st = _solve(env, sub)
    out.update(back[u] for u in w)
    steps.extend(_lift_steps(st, back))


def _recurse_region(
    env: _Env, g: Graph, region, frag, label: str, note: str = ""
) -> tuple[set[int], list[TraceStep]]:
    """Verify ``frag`` on ``region``, then recurse on every component left
    after deleting the region and union the witnesses."""
    region = set(region)
    if not _fragment_ok(g, bits_of(region), frag):
        raise _fail(env, f"fragment failed composition check in {label}", g)
    out = set(frag)
    steps = [_step(env, label, frag, note)]
    rest, back = delete_vertices(g, region)
    for comp, cback in components(rest):
        _solve_sub(env, comp, tuple(back[c] for c in cback), out, steps)
    return out, steps


def _whole(env: _Env, g: Graph, frag, label: str, note: str = ""):
    """A witness claimed for the entire remaining graph, verified directly."""
    ok, _ = is_isolating(g, frag, 1)
    if not ok:
        raise _fail(env, f"whole-graph witness failed in {label}", g)
    return set(frag), [_step(env, label, frag, note)]


def _comp_with_vertex(comps, v_local: int):
    for comp, back in comps:
        if v_local in back:
            return comp, back
    raise AssertionError("vertex lost during deletion")


# ---------------------------------------------------------------------------
# The induction
# ---------------------------------------------------------------------------


def _solve(env: _Env, g: Graph) -> tuple[set[int], list[TraceStep]]:
    """Witness for a connected, admissible, non-special graph (local ids)."""
    n = g.n
    try:
        if special_kind(g) is not None:
            raise _fail(env, "solver entered on a special graph", g)
        if n <= 3:
            return set(), [_step(env, "tiny", ())]
        delta, v = max_degree(g)
        if delta <= 2:
            w = isolating_set_path_or_cycle(g)
            return set(w), [_step(env, "path-or-cycle", w)]
        if delta == n - 1:
            return {v}, [_step(env, "dominating-pivot", {v})]
        witness, steps = _solve_pivot(env, g, v)
    except InternalCaseExhaustion:
        if not env.debug_fallback or n > 20:
            raise
        w = isolation_number(g, 1).witness
        return set(w), [TraceStep("debug/fallback-exact", tuple(sorted(w)))]
    if len(witness) > n // 4 and not any(
        s.label == "debug/fallback-exact" for s in steps
    ):
        raise _fail(
            env, f"witness of size {len(witness)} exceeds floor(n/4)", g, steps
        )
    return witness, steps


def _solve_pivot(env: _Env, g: Graph, v: int) -> tuple[set[int], list[TraceStep]]:
    part = _partition_at(g, v)

    if not part.h_b:
        # Only generic components below the pivot: {v} plus recursion.
        out = {v}
        steps = [_step(env, "all-components-generic", {v}, f"pivot={v}")]
        for comp, back in part.components:
            _solve_sub(env, comp, back, out, steps)
        return out, steps

    for x in sorted(g.adj[v]):
        if part.per_attachment[x][0]:
            return _pendant_cluster(env, g, v, x, part)

    if env.track == TRACK_C6:
        return _c6_lone_attach(env, g, v, part)
    return _ind56_cluster_bound(env, g, v, part)


def _pendant_cluster(env: _Env, g: Graph, v: int, x: int, part: ComponentPartition):
    """Some special components attach only at x: cover them all with one
    fragment anchored at x, then recurse past the cluster.

    Shared by both tracks; only the recursion's forbidden-cycle class
    differs, and both classes are hereditary.
    """
    cluster = part.per_attachment[x][0]
    region = {x}
    frag = {x}
    for idx in cluster:
        comp, back = part.components[idx]
        region.update(back)
        y_local = min(u for u in range(comp.n) if g.has_edge(x, back[u]))
        frag.update(back[u] for u in special_cycle_fragment(comp, y_local))

    rest, back = delete_vertices(g, region)
    comps = components(rest)
    gv, gv_back = _comp_with_vertex(comps, back.index(v))
    kind = special_kind(gv)

    if kind is None:
        return _recurse_region(
            env, g, region, frag, "pendant-cluster/generic-main", f"x={x}"
        )

    gv_orig = {back[u] for u in gv_back}
    if kind in (Special.C7, Special.C11):
        lab = _walk_labels(g, gv_orig, v)
        if kind is Special.C7:
            frag.add(min(lab.one[2], lab.two[2]))
        else:
            frag.update((lab.one[2], lab.two[2]))
    return _recurse_region(
        env,
        g,
        region | gv_orig,
        frag,
        f"pendant-cluster/special-main-{kind.value.lower()}",
        f"x={x}",
    )


def _attach_choice(g: Graph, v: int, part: ComponentPartition):
    """Smallest attachment vertex adjacent to a special component, plus the
    component (ties: smallest first vertex)."""
    for x in sorted(g.adj[v]):
        hits = [i for i in part.h_b if x in part.attachments[i]]
        if hits:
            return x, min(hits, key=lambda i: part.components[i][1][0])
    return None, None


def _split_at(env: _Env, g: Graph, v: int, x: int, hverts: set[int]):
    """Delete block + x; return the region, the pivot-side component and
    the leftovers (each leftover must be generic)."""
    region = hverts | {x}
    rest, back = delete_vertices(g, region)
    comps = components(rest)
    gv, gv_back = _comp_with_vertex(comps, back.index(v))
    gv_orig = {back[u] for u in gv_back}
    others = []
    for comp, cback in comps:
        full = tuple(back[u] for u in cback)
        if v not in full:
            if special_kind(comp) is not None:
                raise _fail(env, "lone-attachment leftover is special", g)
            others.append((comp, full))
    return region, gv, gv_orig, others


# ---------------------------------------------------------------------------
# Track 1: no 6-cycles
# ---------------------------------------------------------------------------


def _c6_lone_attach(env: _Env, g: Graph, v: int, part: ComponentPartition):
    """Every special component attaches at >= 2 vertices; split one off."""
    x, idx = _attach_choice(g, v, part)
    if x is None:
        raise _fail(env, "no attachment vertex for a special component", g)
    kh = part.kinds[idx]
    hverts = set(part.components[idx][1])
    y = min(w for w in g.adj[x] if w in hverts)

    region, gv, gv_orig, others = _split_at(env, g, v, x, hverts)
    kv = special_kind(gv)

    if kv is None:
        # Pivot side stays generic: fragment inside the split block.
        yl = _walk_labels(g, hverts, y)
        if kh in (Special.P3, Special.C3):
            frag = {y}
        elif kh is Special.C7:
            frag = {y, min(yl.one[2], yl.two[2])}
        else:
            frag = {y, yl.one[3], yl.two[3]}
        return _recurse_region(
            env, g, region, frag, "lone-attach/generic-main", f"x={x} y={y}"
        )

    # A special pivot side forces maximum degree 3.
    if max_degree(g)[0] != 3:
        raise _fail(env, "special pivot side with max degree != 3", g)
    if others:
        return _c6_bridge(env, g, v, x, hverts, gv_orig, others)
    return _c6_small(env, g, v, x, y, hverts, kh, gv_orig, kv)


def _c6_bridge(env: _Env, g: Graph, v, x, hverts, gv_orig, others):
    """x also feeds a generic leftover: solve the doubly-attached block
    without x, put x back, and recurse past the bridge vertex z.

    If what lies past z contains a special component, re-pivot at x (x has
    maximum degree here), which lands in the pendant-cluster case.
    """
    zs = [w for w in g.adj[x] if w != v and w not in hverts]
    if len(others) != 1 or len(zs) != 1:
        raise _fail(env, "bridge shape violated (degree bookkeeping)", g)
    z = zs[0]

    wverts = hverts | gv_orig
    sub, wback = induced_subgraph(g, wverts)
    if not is_connected(sub) or special_kind(sub) is not None:
        raise _fail(env, "doubly-attached block is not generic connected", g)

    zone = wverts | {x, z}
    restz, backz = delete_vertices(g, zone)
    zcomps = components(restz)
    if any(special_kind(c) is not None for c, _ in zcomps):
        if g.degree(x) != max_degree(g)[0]:
            raise _fail(env, "re-pivot target is not maximum degree", g)
        out, steps = _solve_pivot(env, g, x)
        steps.insert(0, _step(env, "lone-attach/pivot-redirect", (), f"pivot={x}"))
        return out, steps

    out = {x}
    steps = [_step(env, "lone-attach/bridge", {x}, f"x={x} z={z}")]
    _solve_sub(env, sub, wback, out, steps)
    if not _fragment_ok(g, bits_of(zone), out):
        raise _fail(env, "bridge fragment failed composition check", g, steps)
    for comp, cback in zcomps:
        _solve_sub(env, comp, tuple(backz[c] for c in cback), out, steps)
    return out, steps


def _c6_small(env: _Env, g: Graph, v, x, y, hverts, kh, gv_orig, kv):
    """Whole graph = special block + x + special pivot side.

    Finite configuration table; every branch's witness is verified on the
    full graph, and branches the class forbids raise instead.
    """
    e = g.has_edge
    label = f"lone-attach/small/{kh.value.lower()}-{kv.value.lower()}"
    vl = _walk_labels(g, gv_orig, v)

    if kh is Special.C3:
        raise _fail(env, "C3 block beside a special pivot side forces a 6-cycle", g)

    if kh is Special.P3:
        yl = _walk_labels(g, hverts, y)
        if yl.two:  # y is the middle of the block
            hit = _first_cross_edge(g, yl, vl)
            if hit is None:
                raise _fail(env, "missing second attachment (P3 middle)", g)
            yl, vl = hit
            y1, y1p = yl.one[0], yl.two[0]
            v1, v1p = vl.one[0], vl.two[0]
            if e(x, v1p) or e(y1p, v1p) or e(y1p, x):
                raise _fail(env, "edge forcing a 6-cycle is present", g)
            if kv is Special.C3:
                raise _fail(env, "C3 pivot side here forces a 6-cycle", g)
            if kv is Special.P3:
                if e(y1, v1p):
                    frag = {y1}
                elif e(y1p, v1):
                    frag = {v1}
                else:
                    frag = {x}
            elif kv is Special.C7:
                if not e(y1, v1p):
                    frag = {x, vl.one[2]}
                elif not e(x, vl.two[1]):
                    frag = {y1, vl.one[2]}
                else:
                    frag = {v1, vl.two[1]}
            else:  # C11 pivot side
                if not e(y1, v1p):
                    frag = {x, vl.one[2], vl.two[2]}
                elif not e(x, vl.one[4]) and not e(x, vl.two[4]):
                    frag = {y1, vl.one[2], vl.two[2]}
                else:
                    frag = {x, vl.one[1], vl.two[1]}
            return _whole(env, g, frag, label)

        # y is an endpoint of the block
        y1, y2 = yl.one[0], yl.one[1]
        if e(y2, vl.one[0]) or e(y2, vl.two[0]):
            raise _fail(env, "far endpoint attachment forces a 6-cycle", g)
        if e(y, vl.one[0]) or e(y, vl.two[0]):
            if not e(y, vl.one[0]):
                vl = vl.flipped()
            if kv in (Special.P3, Special.C3):
                frag = {y}
            elif kv is Special.C7:
                frag = {y, vl.two[1]}
            else:
                frag = {y, vl.one[2], vl.two[2]}
            return _whole(env, g, frag, label)
        if e(y1, vl.two[0]) and not e(y1, vl.one[0]):
            vl = vl.flipped()
        if not e(y1, vl.one[0]):
            raise _fail(env, "missing second attachment (P3 endpoint)", g)
        if kv is Special.C3:
            raise _fail(env, "C3 pivot side here forces a 6-cycle", g)
        if e(x, vl.two[0]) or (kv is not Special.P3 and e(x, vl.one[2])):
            raise _fail(env, "edge forcing a 6-cycle is present", g)
        v1 = vl.one[0]
        if e(x, y2):
            if kv is Special.P3:
                frag = {x}
            elif kv is Special.C7:
                frag = {x, vl.one[2]}
            else:
                frag = {x, vl.one[2], vl.two[2]}
        else:
            if kv is Special.P3:
                frag = {v1}
            elif kv is Special.C7:
                frag = {v1, vl.two[2]}
            else:
                frag = {v1, vl.two[2], vl.one[4]}
        return _whole(env, g, frag, label)

    yl = _walk_labels(g, hverts, y)

    if kh is Special.C7:
        if kv is Special.C3:
            return _whole(env, g, {x, min(yl.one[2], yl.two[2])}, label)
        if kv is Special.P3:
            hit = _first_cross_edge(g, yl, vl)
            if hit is None:
                frag = {x, min(yl.one[2], yl.two[2])}
            else:
                yl, vl = hit
                if not e(yl.two[0], vl.one[0]):
                    frag = {x, yl.one[2]}
                elif not e(yl.one[1], x):
                    frag = {vl.one[0], yl.two[2]}
                else:
                    frag = {yl.two[0], yl.one[1]}
            return _whole(env, g, frag, label)
        if kv is Special.C7:
            hit = _first_cross_edge(g, yl, vl)
            if hit is None:
                frag = {x, min(yl.one[2], yl.two[2]), min(vl.one[2], vl.two[2])}
            else:
                # the depth-1 cross edge survives as an isolated edge, so
                # the distance-3 picks must come from the normalized arms
                yl, vl = hit
                frag = {x, yl.one[2], vl.one[2]}
            return _whole(env, g, frag, label)
        # C11 pivot side: two symmetric candidates, take the one that checks
        for y3 in (min(yl.one[2], yl.two[2]), max(yl.one[2], yl.two[2])):
            frag = {x, y3, vl.one[2], vl.two[2]}
            if is_isolating(g, frag, 1)[0]:
                return _whole(env, g, frag, label)
        raise _fail(env, "no candidate witness (C7 block, C11 side)", g)

    # kh is C11
    extra = (
        {vl.one[2], vl.two[2]}
        if kv is Special.C11
        else ({min(vl.one[2], vl.two[2])} if kv is Special.C7 else set())
    )
    if kv is Special.C3:
        return _whole(env, g, {x, yl.one[3], yl.two[3]}, label)
    hit = _first_cross_edge(g, yl, vl)
    if hit is None:
        return _whole(env, g, {x, yl.one[3], yl.two[3]} | extra, label)
    yl, vl = hit
    if kv is Special.P3:
        v1 = vl.one[0]
        if not e(yl.two[0], v1):
            frag = {x, yl.two[3], yl.one[2]}
        elif not e(yl.one[1], x) and not e(yl.two[1], x):
            frag = {yl.two[3], yl.one[3], v1}
        elif e(yl.one[1], x):
            frag = {yl.two[3], yl.one[2], v1}
        else:
            frag = {yl.two[2], yl.one[3], v1}
        return _whole(env, g, frag, label)
    # C7 or C11 pivot side; v3 must come from the normalized arm so the
    # depth-1 cross edge is left as an isolated edge
    extra = {vl.one[2], vl.two[2]} if kv is Special.C11 else {vl.one[2]}
    if not e(yl.one[4], vl.two[0]):
        frag = {x, yl.two[3], yl.one[2]} | extra
    else:
        frag = {y, yl.two[2], yl.one[4]} | extra
    return _whole(env, g, frag, label)


# ---------------------------------------------------------------------------
# Track 2: no induced 5- and 6-cycles
# ---------------------------------------------------------------------------


def _ind56_cluster_bound(env: _Env, g: Graph, v: int, part: ComponentPartition):
    """Every special component attaches at >= 2 vertices.  Depending on how
    the pivot degree compares with the number of special components, one of
    two block covers (or their pigeonhole merge) settles the bound;
    otherwise the finite degree-3/degree-4 tables take over."""
    delta = g.degree(v)
    hb = part.h_b

    def block_fragment(idx: int, anchored: bool, x_override: int | None = None):
        comp, back = part.components[idx]
        verts = set(back)
        x_h = min(part.attachments[idx]) if x_override is None else x_override
        y_h = min(w for w in g.adj[x_h] if w in verts)
        kind = part.kinds[idx]
        if kind in (Special.P3, Special.C3):
            return {x_h} if anchored else {y_h}
        lab = _walk_labels(g, verts, y_h)
        if anchored:
            if kind is Special.C7:
                return {x_h, min(lab.one[2], lab.two[2])}
            return {x_h, lab.one[2], lab.two[2]}
        if kind is Special.C7:
            return {lab.one[1], lab.two[1]}
        return {lab.one[1], lab.two[1], lab.two[4]}

    region = {v}
    region.update(g.adj[v])
    for idx in hb:
        region.update(part.components[idx][1])

    if delta >= len(hb) + 3:
        frag = {v}
        for idx in hb:
            frag |= block_fragment(idx, anchored=False)
        return _recurse_region(
            env, g, region, frag, "cluster-bound/one-per-block", f"pivot={v}"
        )

    if delta <= len(hb):
        frag = set(g.adj[v])
        for idx in hb:
            frag |= block_fragment(idx, anchored=True)
        return _recurse_region(
            env, g, region, frag, "cluster-bound/attach-cover", f"pivot={v}"
        )

    if delta >= 5:
        shared = None
        for x in sorted(g.adj[v]):
            touching = sorted(
                (i for i in hb if x in part.attachments[i]),
                key=lambda i: part.components[i][1][0],
            )
            if len(touching) >= 2:
                shared = (x, touching[0], touching[1])
                break
        if shared is None:
            raise _fail(env, "pigeonhole attachment vertex not found", g)
        x, h1, h2 = shared
        frag = {v}
        frag |= block_fragment(h1, anchored=True, x_override=x)
        frag |= block_fragment(h2, anchored=True, x_override=x)
        for idx in hb:
            if idx not in (h1, h2):
                frag |= block_fragment(idx, anchored=False)
        return _recurse_region(
            env, g, region, frag, "cluster-bound/shared-attach", f"x={x}"
        )

    if delta == 3:
        return _ind56_deg3(env, g, v, part)
    return _ind56_deg4(env, g, v, part)


def _emit(env: _Env, g: Graph, frag, scope, label, *, region, gv_pack, others):
    """Common tail for the finite tables: verify the fragment on its scope
    and recurse on whatever the scope leaves over."""
    gv, gv_orig = gv_pack
    if scope == "whole":
        if others:
            raise _fail(env, f"stray components where none may exist in {label}", g)
        return _whole(env, g, frag, label)
    if scope == "block+pivotside":
        zone = set(region) | gv_orig
        if not _fragment_ok(g, bits_of(zone), frag):
            raise _fail(env, f"fragment failed composition check in {label}", g)
        out = set(frag)
        steps = [_step(env, label, frag)]
        for comp, full in others:
            _solve_sub(env, comp, full, out, steps)
        return out, steps
    # scope == "block": recurse on the pivot side and the leftovers
    if not _fragment_ok(g, bits_of(region), frag):
        raise _fail(env, f"fragment failed composition check in {label}", g)
    out = set(frag)
    steps = [_step(env, label, frag)]
    sub, back = induced_subgraph(g, gv_orig)
    _solve_sub(env, sub, back, out, steps)
    for comp, full in others:
        _solve_sub(env, comp, full, out, steps)
    return out, steps


def _pivotside_pad(g: Graph, gv_orig: set[int], v: int, kv: Special | None):
    """{x}-style witnesses need distance-3 vertices of a special pivot side."""
    if kv in (None, Special.P3, Special.C3):
        return set()
    lv = _walk_labels(g, gv_orig, v)
    if kv is Special.C7:
        return {min(lv.one[2], lv.two[2])}
    return {lv.one[2], lv.two[2]}


def _ind56_deg3(
    env: _Env,
    g: Graph,
    v: int,
    part: ComponentPartition,
    forced: tuple[int, int] | None = None,
):
    """Pivot degree 3: split one special block off at its attachment and
    run the finite table on (block kind, pivot-side kind)."""
    e = g.has_edge
    if forced is None:
        x, idx = _attach_choice(g, v, part)
        if x is None:
            raise _fail(env, "no attachment vertex for a special component", g)
        hverts = set(part.components[idx][1])
        y = min(w for w in g.adj[x] if w in hverts)
    else:
        x, y = forced
        idx = next(i for i in part.h_b if y in part.components[i][1])
        hverts = set(part.components[idx][1])
    kh = part.kinds[idx]

    region, gv, gv_orig, others = _split_at(env, g, v, x, hverts)
    kv = special_kind(gv)
    v1_pair = sorted(w for w in g.adj[v] if w != x)
    vslots = _SL(v, [v1_pair[0]], [v1_pair[1]])
    kit = dict(region=region, gv_pack=(gv, gv_orig), others=others)

    if kh is Special.C3:
        yl = _walk_labels(g, hverts, y)
        hit = _first_cross_edge(g, yl, vslots)
        if hit is None:
            raise _fail(env, "C3 block missing its second attachment", g)
        yl, vtmp = hit
        if kv is None:
            return _emit(env, g, {y}, "block", "deg3/c3-generic", **kit)
        if kv is Special.P3:
            if not e(x, vtmp.one[0]) or e(yl.two[0], vtmp.two[0]):
                raise _fail(env, "induced 5-cycle forced (C3 block, P3 side)", g)
            return _emit(env, g, {x}, "whole", "deg3/c3-p3", **kit)
        raise _fail(env, "C3 block beside a cycle pivot side is impossible", g)

    if kh is Special.P3:
        yl = _walk_labels(g, hverts, y)
        if yl.two:
            return _ind56_deg3_p3_middle(env, g, v, x, y, yl, vslots, kv, kit)
        return _ind56_deg3_p3_end(env, g, v, part, x, y, yl, v1_pair, kv, kit)

    yl = _walk_labels(g, hverts, y)
    if any(e(a, b) for a in (yl.one[1], yl.two[1]) for b in v1_pair):
        raise _fail(env, "depth-2 attachment forces an induced short cycle", g)

    if kh is Special.C7:
        core = {x, min(yl.one[2], yl.two[2])}
        hit = _first_cross_edge(g, yl, vslots)
        if hit is not None:
            yl2, vtmp = hit
            if not e(x, vtmp.one[0]) or e(yl2.two[0], vtmp.two[0]):
                raise _fail(env, "induced 5-cycle forced (C7 block)", g)
            if kv is None:
                return _emit(env, g, core, "block", "deg3/c7-main-attached", **kit)
            if kv is not Special.P3:
                raise _fail(env, "C7 block: attached pivot side must be P3", g)
            return _emit(env, g, core, "whole", "deg3/c7-p3-attached", **kit)
        if kv is None:
            return _emit(env, g, core, "block", "deg3/c7-generic", **kit)
        frag = core | _pivotside_pad(g, gv_orig, v, kv)
        return _emit(env, g, frag, "block+pivotside", "deg3/c7-special", **kit)

    # kh is C11
    core = {y, yl.one[3], yl.two[3]}
    anchored = {x, yl.one[3], yl.two[3]}
    hit = _first_cross_edge(g, yl, vslots)
    if hit is not None:
        yl2, vtmp = hit
        if not e(vtmp.one[0], x) or e(yl2.two[0], vtmp.two[0]):
            raise _fail(env, "induced 5-cycle forced (C11 block)", g)
        if kv is None:
            return _emit(env, g, core, "block", "deg3/c11-main-attached", **kit)
        if kv is not Special.P3:
            raise _fail(env, "C11 block: attached pivot side must be P3", g)
        return _emit(env, g, anchored, "whole", "deg3/c11-p3-attached", **kit)
    if kv is None:
        return _emit(env, g, core, "block", "deg3/c11-generic", **kit)
    frag = anchored | _pivotside_pad(g, gv_orig, v, kv)
    return _emit(env, g, frag, "block+pivotside", "deg3/c11-special", **kit)


def _ind56_deg3_p3_middle(env, g, v, x, y, yl, vslots, kv, kit):
    """Degree-3 table, P3 block attached at its middle vertex."""
    e = g.has_edge
    hit = _first_cross_edge(g, yl, vslots)
    if hit is None:
        raise _fail(env, "P3-middle block missing its second attachment", g)
    yl, vtmp = hit
    if kv is None:
        return _emit(env, g, {y}, "block", "deg3/p3mid-generic", **kit)
    if kv is Special.P3:
        if not (e(yl.one[0], x) or e(vtmp.one[0], x)):
            raise _fail(env, "induced 5-cycle forced (P3 middle, P3 side)", g)
        return _emit(env, g, {x}, "whole", "deg3/p3mid-p3", **kit)
    if not e(yl.one[0], x) or e(yl.two[0], vtmp.two[0]):
        raise _fail(env, "induced 5-cycle forced (P3 middle, cycle side)", g)
    frag = {x} | _pivotside_pad(g, kit["gv_pack"][1], v, kv)
    return _emit(env, g, frag, "whole", "deg3/p3mid-cycle", **kit)


def _ind56_deg3_p3_end(env, g, v, part, x, y, yl, v1_pair, kv, kit):
    """Degree-3 table, P3 block attached at an endpoint."""
    e = g.has_edge
    y1, y2 = yl.one[0], yl.one[1]
    for xp in sorted(g.adj[v]):
        if e(y1, xp):
            # The middle vertex reaches the pivot's neighborhood: treat
            # that as the attachment instead.
            return _ind56_deg3(env, g, v, part, forced=(xp, y1))
    if not any(e(y2, w) for w in v1_pair):
        if kv is None:
            return _emit(env, g, {y}, "block", "deg3/p3end-clean", **kit)
        frag = {x} | _pivotside_pad(g, kit["gv_pack"][1], v, kv)
        return _emit(
            env, g, frag, "block+pivotside", "deg3/p3end-clean-special", **kit
        )
    v1 = v1_pair[0] if e(y2, v1_pair[0]) else v1_pair[1]
    if e(x, v1):
        raise _fail(env, "induced 5-cycle forced (P3 endpoint)", g)
    if e(x, y2):
        return _xy2_finish(env, g, v, x, kv, kit, "deg3/p3end-xy2")
    if e(y, v1):
        # Re-anchor at v1, which now sees both endpoints of the block.
        region2, gv2, gv_orig2, others2 = _split_at(env, g, v, v1, {y, y1, y2})
        kit2 = dict(region=region2, gv_pack=(gv2, gv_orig2), others=others2)
        return _xy2_finish(
            env, g, v, v1, special_kind(gv2), kit2, "deg3/p3end-reanchor"
        )
    raise _fail(env, "induced 6-cycle forced (P3 endpoint)", g)


def _xy2_finish(env, g, v, x, kv, kit, label):
    """The attachment vertex dominates the whole block: {x} settles it,
    padded with pivot-side vertices when that side is special."""
    if kv is None:
        return _emit(env, g, {x}, "block", label, **kit)
    frag = {x} | _pivotside_pad(g, kit["gv_pack"][1], v, kv)
    return _emit(env, g, frag, "whole", label, **kit)


def _ind56_deg4(
    env: _Env,
    g: Graph,
    v: int,
    part: ComponentPartition,
    forced: tuple[int, int] | None = None,
):
    """Pivot degree 4: the pivot side is never special; the finite table
    places the whole fragment inside the split-off block."""
    e = g.has_edge
    if forced is None:
        x, idx = _attach_choice(g, v, part)
        if x is None:
            raise _fail(env, "no attachment vertex for a special component", g)
        hverts = set(part.components[idx][1])
        y = min(w for w in g.adj[x] if w in hverts)
    else:
        x, y = forced
        idx = next(i for i in part.h_b if y in part.components[i][1])
        hverts = set(part.components[idx][1])
    kh = part.kinds[idx]

    region, gv, gv_orig, others = _split_at(env, g, v, x, hverts)
    if special_kind(gv) is not None:
        raise _fail(env, "degree-4 pivot side cannot be special", g)
    xs = sorted(w for w in g.adj[v] if w != x)
    kit = dict(region=region, gv_pack=(gv, gv_orig), others=others)

    def emit_block(frag, label):
        return _emit(env, g, frag, "block", label, **kit)

    if kh in (Special.P3, Special.C3):
        yl = _walk_labels(g, hverts, y)
        if yl.two or kh is Special.C3:
            return emit_block({y}, "deg4/block-center")
        y1, y2 = yl.one[0], yl.one[1]
        for xp in sorted(g.adj[v]):
            if e(y1, xp):
                return _ind56_deg4(env, g, v, part, forced=(xp, y1))
        if not any(e(y2, w) for w in xs):
            return emit_block({y}, "deg4/p3end-clean")
        x1 = next(w for w in xs if e(y2, w))
        if e(x, y2):
            return emit_block({x}, "deg4/p3end-xy2")
        if e(x1, y):
            region2, gv2, gv_orig2, others2 = _split_at(env, g, v, x1, {y, y1, y2})
            kit2 = dict(region=region2, gv_pack=(gv2, gv_orig2), others=others2)
            return _emit(env, g, {x1}, "block", "deg4/p3end-reanchor", **kit2)
        raise _fail(env, "induced 5/6-cycle forced (deg4 P3 endpoint)", g)

    def rekit(x_new):
        # the swap-x-with-x1 relabel moves the attachment vertex, so the
        # region splits off at the new one
        region2, gv2, gv_orig2, others2 = _split_at(env, g, v, x_new, hverts)
        return dict(region=region2, gv_pack=(gv2, gv_orig2), others=others2)

    def emit_kit(frag, label, akit):
        return _emit(env, g, frag, "block", label, **akit)

    if kh is Special.C7:
        yl = _walk_labels(g, hverts, y)
        if not any(e(yl.one[1], w) for w in xs):
            return emit_block({y, yl.two[2]}, "deg4/c7-clean")
        if not any(e(yl.two[1], w) for w in xs):
            return emit_block({y, yl.one[2]}, "deg4/c7-clean")
        x1 = next(w for w in xs if e(yl.one[1], w))
        rest = [w for w in xs if w != x1]

        def c7_root_attached(lab, akit):
            # the far side's depth-2 vertex must stay clean
            if not any(e(lab.two[1], w) for w in rest):
                return emit_kit({lab.root, lab.one[2]}, "deg4/c7-attach-far", akit)
            raise _fail(env, "induced 5/6-cycle forced (deg4 C7 tail)", g)

        if e(x1, y):
            return c7_root_attached(yl, kit)
        if e(x, yl.one[1]):
            return c7_root_attached(
                _walk_labels(g, hverts, yl.one[1], first=yl.one[0]), rekit(x1)
            )
        y1 = yl.one[0]
        if e(y1, x) and e(y1, x1):
            if not any(e(yl.two[0], w) for w in rest):
                return emit_block({y1, yl.two[2]}, "deg4/c7-depth1-pair")
            x2 = next(w for w in rest if e(yl.two[0], w))
            x3 = next(w for w in rest if w != x2)
            if e(x2, y):
                if e(yl.one[2], x3):
                    return emit_block({y, yl.one[2]}, "deg4/c7-wrap-far")
                return emit_block({y1, yl.two[1]}, "deg4/c7-wrap-near")
            raise _fail(env, "induced 5/6-cycle forced (deg4 C7 depth-1)", g)

        def c7_fan(lab, other, akit):
            if e(lab.two[0], other) or any(e(lab.two[0], w) for w in rest):
                raise _fail(env, "induced 5/6-cycle forced (deg4 C7 fan)", g)
            return emit_kit({lab.one[0], lab.two[2]}, "deg4/c7-fan", akit)

        if e(x, y1) and e(x, x1):
            return c7_fan(yl, x1, kit)
        if e(x1, y1) and e(x1, x):
            return c7_fan(
                _walk_labels(g, hverts, yl.one[1], first=yl.one[0]), x, rekit(x1)
            )
        raise _fail(env, "six-cycle closed without admissible chords (deg4 C7)", g)

    # kh is C11
    yl = _walk_labels(g, hverts, y)
    dirty_one = any(e(yl.one[1], w) for w in xs)
    dirty_two = any(e(yl.two[1], w) for w in xs)
    if not dirty_one and not dirty_two:
        return emit_block({y, yl.one[3], yl.two[3]}, "deg4/c11-clean")
    if not dirty_one:
        yl = yl.flipped()
    x1 = next(w for w in xs if e(yl.one[1], w))
    rest = [w for w in xs if w != x1]

    def c11_direct(lab, akit):
        if any(e(lab.root, w) for w in rest):
            raise _fail(env, "induced 5-cycle forced (deg4 C11 root)", g)
        if not any(e(lab.one[3], w) for w in rest):
            return emit_kit(
                {lab.one[1], lab.two[1], lab.two[4]}, "deg4/c11-attach-near", akit
            )
        return emit_kit(
            {lab.one[1], lab.one[4], lab.two[2]}, "deg4/c11-attach-deep", akit
        )

    def c11_depth1_pair(lab):
        d1 = [w for w in rest if e(lab.two[0], w)]
        d2 = [w for w in rest if e(lab.two[1], w)]
        if not d1 and not d2:
            return emit_block(
                {lab.one[0], lab.one[3], lab.two[3]}, "deg4/c11-depth1-pair"
            )
        if d1:
            x2 = d1[0]
            x3 = next(w for w in rest if w != x2)
            if e(x2, lab.root):
                if e(lab.one[2], x3):
                    return emit_block(
                        {lab.root, lab.one[2], lab.two[2]}, "deg4/c11-pair-deep"
                    )
                if e(lab.one[3], x3):
                    return emit_block(
                        {lab.one[0], lab.two[1], lab.one[3]}, "deg4/c11-pair-mid"
                    )
                return emit_block(
                    {lab.one[0], lab.two[1], lab.two[4]}, "deg4/c11-pair-near"
                )
            raise _fail(env, "induced 5-cycle forced (deg4 C11 depth-1)", g)
        x2 = d2[0]
        x3 = next(w for w in rest if w != x2)
        if e(lab.one[2], x3):
            if e(x3, lab.one[1]) and e(x3, x):
                return emit_block(
                    {lab.one[0], lab.one[3], lab.two[1]}, "deg4/c11-deep-pair"
                )
            raise _fail(env, "induced 5/6-cycle forced (deg4 C11 deep)", g)
        if e(lab.one[3], x3):
            return emit_block(
                {lab.one[0], lab.two[1], lab.one[3]}, "deg4/c11-deep-mid"
            )
        return emit_block(
            {lab.one[0], lab.two[1], lab.two[4]}, "deg4/c11-deep-near"
        )

    def c11_fan(lab, other, akit):
        if e(lab.two[0], other) or e(lab.two[1], other):
            raise _fail(env, "induced 5-cycle forced (deg4 C11 fan)", g)
        if any(e(lab.two[0], w) for w in rest) or any(
            e(lab.two[1], w) for w in rest
        ):
            raise _fail(env, "induced 5/6-cycle forced (deg4 C11 fan tail)", g)
        return emit_kit({lab.one[0], lab.one[3], lab.two[3]}, "deg4/c11-fan", akit)

    y1 = yl.one[0]
    if e(x, yl.one[1]):
        return c11_direct(yl, kit)
    if e(x1, y):
        return c11_direct(
            _walk_labels(g, hverts, yl.one[1], first=yl.one[0]), rekit(x1)
        )
    if e(y1, x) and e(y1, x1):
        return c11_depth1_pair(yl)
    if e(x, y1) and e(x, x1):
        return c11_fan(yl, x1, kit)
    if e(x1, y1) and e(x1, x):
        return c11_fan(
            _walk_labels(g, hverts, yl.one[1], first=yl.one[0]), x, rekit(x1)
        )
    raise _fail(env, "six-cycle closed without admissible chords (deg4 C11)", g)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def _construct(g: Graph, env: _Env) -> tuple[frozenset[int], CaseTrace]:
    if not is_connected(g):
        raise PreconditionViolation("graph must be connected")
    kind = special_kind(g)
    if kind is not None:
        raise PreconditionViolation(f"the bound does not hold for {kind.value}")
    rep = admissibility(g)
    if env.track == TRACK_C6:
        if not rep.c6_free:
            raise ContainsForbiddenCycle("graph contains a 6-cycle", rep.c6_witness)
    else:
        if not rep.induced5_free:
            raise ContainsForbiddenCycle(
                "graph contains an induced 5-cycle", rep.induced5_witness
            )
        if not rep.induced6_free:
            raise ContainsForbiddenCycle(
                "graph contains an induced 6-cycle", rep.induced6_witness
            )
    witness, steps = _solve(env, g)
    ok, _ = is_isolating(g, witness, 1)
    fallback = any(s.label == "debug/fallback-exact" for s in steps)
    if not ok or (len(witness) > g.n // 4 and not fallback):
        raise InternalCaseExhaustion("final witness failed verification", g, steps)
    return frozenset(witness), CaseTrace(tuple(steps))


def construct_c6_free(
    g: Graph, *, debug_fallback: bool = False
) -> tuple[frozenset[int], CaseTrace]:
    """Verified 1-isolating set of size <= floor(n/4) for a connected graph
    without 6-cycles (P3, C3, C7, C11 excluded)."""
    return _construct(g, _Env(TRACK_C6, debug_fallback))


def construct_induced56_free(
    g: Graph, *, debug_fallback: bool = False
) -> tuple[frozenset[int], CaseTrace]:
    """Verified 1-isolating set of size <= floor(n/4) for a connected graph
    without induced 5- and 6-cycles (P3, C3, C7, C11 excluded)."""
    return _construct(g, _Env(TRACK_IND56, debug_fallback))
