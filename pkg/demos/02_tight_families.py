"""The pendant-gadget families where the quarter bound is exactly tight.

Take any connected backbone F without 6-cycles (or without induced 5- and
6-cycles) and hang one gadget from {P3, C3, C7, C11} off each backbone
vertex.  Every block of the result (backbone vertex plus its gadget) forces
a quarter of its vertices into any 1-isolating set, so the whole graph has
isolation number exactly n/4.
"""

from isoset import (
    ExtremalSpec,
    Graph,
    Special,
    build_extremal,
    is_isolating,
    isolation_number,
    path_graph,
)

print("Single blocks: one backbone vertex plus one gadget.")
for kind in Special:
    inst = build_extremal(ExtremalSpec(Graph(1), (kind,)))
    g = inst.graph
    exact = isolation_number(g, 1).size
    print(
        f"  K1 + {kind.value:3s}: n={g.n:2d}  designated witness "
        f"{sorted(inst.designated_witness)}  exact iota_1 = {exact} = n/4"
    )
    assert 4 * exact == g.n

print("\nA four-block instance over a path backbone (order 28):")
spec = ExtremalSpec(
    path_graph(4), (Special.P3, Special.P3, Special.C7, Special.C11)
)
inst = build_extremal(spec)
ok, rd = is_isolating(inst.graph, inst.designated_witness, 1)
print(f"  n = {inst.graph.n}, witness size = {len(inst.designated_witness)}")
print(f"  witness verifies: {ok} (residual max degree {rd})")
print(f"  blocks: {[sorted(b) for b in inst.blocks]}")

print("\nPendant leaves pad the order without buying a smaller witness,")
print("covering every order n with iota_1 = floor(n/4):")
for leaves in range(4):
    inst = build_extremal(ExtremalSpec(Graph(1), (Special.P3,), leaves=leaves))
    n = inst.graph.n
    exact = isolation_number(inst.graph, 1).size
    print(f"  n = {n}: iota_1 = {exact} = floor({n}/4) = {n // 4}")
    assert exact == n // 4
