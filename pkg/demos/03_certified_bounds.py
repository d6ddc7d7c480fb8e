"""Certified quarter-order witnesses for the two forbidden-cycle classes.

Connected graphs without 6-cycles, and connected graphs without induced
5- and 6-cycles, always admit a 1-isolating set of size floor(n/4) once the
four special graphs P3, C3, C7, C11 are excluded.  The constructive solver
walks the inductive case analysis, re-verifies every fragment it places,
and returns the witness with a trace of the cases taken.
"""

from collections import Counter

from isoset import (
    ContainsForbiddenCycle,
    construct_c6_free,
    construct_induced56_free,
    cycle_graph,
    is_isolating,
    isolation_number,
    random_admissible,
    special_kind,
)
from isoset.generators import CLASS_C6_FREE, CLASS_INDUCED56_FREE

g = random_admissible(40, 52, CLASS_C6_FREE, seed=20)
witness, trace = construct_c6_free(g)
ok, rd = is_isolating(g, witness, 1)
print(f"random 6-cycle-free graph: n={g.n}, m={g.m}")
print(f"  witness size {len(witness)} <= floor(n/4) = {g.n // 4}; verified={ok}")
print("  case trace:")
for step in trace.steps:
    frag = f" -> {list(step.fragment)}" if step.fragment else ""
    note = f"  ({step.note})" if step.note else ""
    print(f"    {step.label}{frag}{note}")

print("\nRejections carry the offending cycle:")
try:
    construct_c6_free(cycle_graph(6))
except ContainsForbiddenCycle as exc:
    print(f"  C6: {exc} -- witness {exc.witness.vertices}")

print("\nBatch run, both tracks, comparing against the exact optimum")
print("on the small instances:")
for cls, fn, label in (
    (CLASS_C6_FREE, construct_c6_free, "no 6-cycles"),
    (CLASS_INDUCED56_FREE, construct_induced56_free, "no induced 5/6-cycles"),
):
    cases = Counter()
    gap_hit = total = 0
    for seed in range(40):
        g = random_admissible(4 + seed, 4 + seed + seed // 2, cls, seed=seed)
        if special_kind(g) is not None:
            continue
        witness, trace = fn(g)
        assert is_isolating(g, witness, 1)[0]
        total += 1
        cases.update(s.label.split("/", 1)[1].split("/")[0] for s in trace.steps)
        if g.n <= 14 and len(witness) == isolation_number(g, 1).size:
            gap_hit += 1
    top = ", ".join(f"{k} x{v}" for k, v in cases.most_common(4))
    print(f"  {label}: {total} graphs, all verified; frequent cases: {top}")
    print(f"    witness matched the exact optimum {gap_hit} times on n <= 14")
