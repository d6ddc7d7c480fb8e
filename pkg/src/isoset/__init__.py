"""Isolating sets in graphs.

A set D of vertices k-isolates a graph G when G - N[D] has maximum degree
at most k; the k-isolation number is the size of a smallest such set.  The
package provides exact solvers and verifiers, certified constructions
achieving the floor(n/4) bound for connected graphs without 6-cycles or
without induced 5- and 6-cycles, the tight pendant-gadget families, small
graph catalogs, and a command-line harness for scans and counterexample
search.
"""

from .graph import (
    EmptyGraph,
    EndpointOutOfRange,
    Graph,
    SelfLoop,
    Special,
    bfs_distance,
    closed_neighborhood,
    complete_graph,
    components,
    cycle_graph,
    delete_closed_neighborhood,
    delete_vertices,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_connected,
    max_degree,
    path_graph,
    special_kind,
    star_graph,
)
from .cycles import (
    AdmissibilityReport,
    CycleWitness,
    admissibility,
    find_cycle_of_length,
    find_induced_cycle_of_length,
    girth,
)
from .exact import (
    IsolationCertificate,
    OrderTooLarge,
    compose_check,
    greedy_isolating_set,
    is_isolating,
    isolation_number,
    isolation_number_bruteforce,
)
from .constructive import (
    CaseTrace,
    ComponentPartition,
    ContainsForbiddenCycle,
    InternalCaseExhaustion,
    PreconditionViolation,
    TraceStep,
    construct_c6_free,
    construct_induced56_free,
    isolating_set_path_or_cycle,
    partition_pivot,
    special_cycle_fragment,
)
from .generators import (
    BadSpec,
    ExtremalInstance,
    ExtremalSpec,
    InadmissibleBackbone,
    build_extremal,
    canonical_form,
    enumerate_all,
    enumerate_connected,
    random_admissible,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
