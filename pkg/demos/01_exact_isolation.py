"""Computing and verifying isolation numbers.

A set D of vertices k-isolates a graph when deleting the closed
neighborhood N[D] leaves maximum degree at most k.  For k = 1 the survivors
are isolated vertices and isolated edges.  This demo computes the exact
1-isolation number for a few familiar graphs and verifies the witnesses.
"""

from isoset import (
    cycle_graph,
    disjoint_union,
    greedy_isolating_set,
    is_isolating,
    isolation_number,
    isolation_number_bruteforce,
    path_graph,
    star_graph,
)


def show(name, g, k=1):
    cert = isolation_number(g, k)
    ok, rd = is_isolating(g, cert.witness, k)
    print(
        f"{name:14s} n={g.n:2d}  iota_{k} = {cert.size}   "
        f"witness={sorted(cert.witness)}  residual max degree={rd}  ok={ok}"
    )


print("A star is settled by its center; paths need one vertex per four:")
show("K_{1,5}", star_graph(5))
show("P7", path_graph(7))
show("P12", path_graph(12))

print("\nCycles follow floor(n/4) except for four stubborn lengths")
print("(3, 6, 7 and 11 need one extra vertex):")
for n in range(3, 17):
    cert = isolation_number(cycle_graph(n), 1)
    extra = "  <- exceptional" if n in (3, 6, 7, 11) else ""
    print(f"  C{n:<2d} iota_1 = {cert.size}  floor(n/4) = {n // 4}{extra}")

print("\nThe objective is additive over connected components:")
both = disjoint_union([path_graph(3), path_graph(3)])
show("P3 + P3", both)

print("\nGreedy gives a quick upper bound; brute force agrees with the solver:")
g = cycle_graph(13)
print(f"  greedy on C13: size {greedy_isolating_set(g, 1).size}")
print(f"  exact  on C13: size {isolation_number(g, 1).size}")
print(f"  brute  on C13: size {isolation_number_bruteforce(g, 1).size}")

print("\nHigher isolation orders only get easier:")
for k in (0, 1, 2):
    show("C12", cycle_graph(12), k)
