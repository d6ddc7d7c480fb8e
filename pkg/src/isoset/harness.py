"""Experiment harness: bound scans over exhaustive catalogs and the
hill-climbing ratio search over graphs without induced 6-cycles.

Reports are plain data with a stable JSON rendering: runs with identical
seeds and flags must serialize byte-identically, so wall-clock timings stay
out of the JSON by default (the text rendering always shows them).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, is_connected, special_kind, Special
from .cycles import admissibility, find_induced_cycle_of_length
from .exact import isolation_number
from .generators import (
    CLASS_INDUCED6_FREE,
    ExtremalSpec,
    build_extremal,
    enumerate_connected,
    random_admissible,
)
from .formats import to_edge_list

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    """Per-graph records plus aggregates for one command invocation."""

    command: str
    inputs: dict
    records: list[dict] = field(default_factory=list)
    aggregate: dict = field(default_factory=dict)

    def add(self, **record) -> dict:
        self.records.append(record)
        return record

    def violations(self) -> int:
        return sum(1 for r in self.records if r.get("violation"))

    def finalize(self) -> "RunReport":
        self.aggregate.setdefault("graphs", len(self.records))
        self.aggregate.setdefault("violations", self.violations())
        return self

    def to_json(self, include_timings: bool = False) -> str:
        def strip(rec: dict) -> dict:
            if include_timings:
                return rec
            return {k: v for k, v in rec.items() if k != "time_ms"}

        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "records": [strip(r) for r in self.records],
            "aggregate": self.aggregate,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            parts = [f"{k}={v}" for k, v in r.items()]
            lines.append("  ".join(parts))
        lines.append(
            "aggregate: "
            + "  ".join(f"{k}={v}" for k, v in sorted(self.aggregate.items()))
        )
        return "\n".join(lines) + "\n"


def _ms(t0: float) -> int:
    return int((time.monotonic() - t0) * 1000)


# ---------------------------------------------------------------------------
# Exhaustive bound scans
# ---------------------------------------------------------------------------

SCAN_ASSERTIONS = ("thm11", "thm15", "thm16", "thm17")


def _scan_filter(assertion: str, g: Graph) -> bool:
    kind = special_kind(g)
    if assertion == "thm11":
        return True
    if assertion == "thm15":
        # excluded: P3, C3 and the 6-cycle
        if kind in (Special.P3, Special.C3):
            return False
        return not (g.n == 6 and g.m == 6 and g.degree_sequence() == (2,) * 6)
    rep = admissibility(g)
    if assertion == "thm16":
        return kind is None and rep.c6_free
    if assertion == "thm17":
        return kind is None and rep.induced5_free and rep.induced6_free
    raise ValueError(f"unknown assertion {assertion!r}")


def _scan_bound_holds(assertion: str, n: int, size: int, k: int) -> bool:
    if assertion == "thm11":
        return (k + 2) * size <= n
    if assertion == "thm15":
        return 7 * size <= 2 * n
    return size <= n // 4


def scan_assertion(n_max: int, assertion: str, k: int = 1) -> RunReport:
    """Check one of the known bounds over every connected graph up to
    isomorphism of order <= n_max; nonzero violations fail the run."""
    if assertion not in SCAN_ASSERTIONS:
        raise ValueError(f"unknown assertion {assertion!r}")
    if assertion != "thm11":
        k = 1
    report = RunReport(
        "scan", {"nmax": n_max, "assert": assertion, "k": k}
    )
    checked = 0
    for n in range(1, n_max + 1):
        for idx, g in enumerate(enumerate_connected(n)):
            if not _scan_filter(assertion, g):
                continue
            t0 = time.monotonic()
            cert = isolation_number(g, k)
            holds = _scan_bound_holds(assertion, n, cert.size, k)
            checked += 1
            if not holds:
                report.add(
                    graph=f"n{n}#{idx}",
                    order=n,
                    size=cert.size,
                    violation=True,
                    edges=list(g.edges),
                    time_ms=_ms(t0),
                )
    report.aggregate["checked"] = checked
    report.aggregate["graphs"] = checked
    return report.finalize()


# ---------------------------------------------------------------------------
# Hill-climbing ratio search (graphs without induced 6-cycles)
# ---------------------------------------------------------------------------


@dataclass
class SearchState:
    """Best instance seen by the ratio search, with the exact ratio kept as
    an integer pair."""

    best_graph: Graph
    best_ratio: tuple[int, int]
    best_witness: tuple[int, ...]
    seed: int
    steps: int
    schedule: dict


def _ratio(g: Graph) -> tuple[Fraction, tuple[int, ...]]:
    cert = isolation_number(g, 1)
    return Fraction(cert.size, g.n), tuple(sorted(cert.witness))


def _seed_graph(n_min: int, n_max: int) -> Graph:
    """Largest pendant-gadget instance fitting the range, if any: the
    family achieves ratio exactly 1/4 and has no induced 6-cycles."""
    t = n_max // 4
    if t >= 1 and 4 * t >= n_min:
        backbone = Graph(t, [(i, i + 1) for i in range(t - 1)])
        spec = ExtremalSpec(backbone, (Special.P3,) * t)
        return build_extremal(spec).graph
    return Graph(1)


def _admissible_flip(g: Graph, u: int, v: int, removing: bool) -> Graph | None:
    if removing:
        trial = Graph(g.n, [e for e in g.edges if e != (min(u, v), max(u, v))])
        if not is_connected(trial):
            return None
        # removing a chord can expose an induced 6-cycle
        if find_induced_cycle_of_length(trial, 6) is not None:
            return None
        return trial
    trial = Graph(g.n, list(g.edges) + [(u, v)])
    if find_induced_cycle_of_length(trial, 6) is not None:
        return None
    return trial


def hill_climb(
    n_min: int,
    n_max: int,
    budget: int,
    seed: int,
    restart_interval: int = 400,
) -> SearchState:
    """Maximize the exact ratio iota_1/n over connected graphs without
    induced 6-cycles by seeded random edge flips with restarts.

    A flip is accepted when the ratio does not decrease; the best instance
    is re-verified against the class before reporting.  Deterministic for a
    fixed seed, budget, range and restart interval.
    """
    rng = random.Random(seed)
    current = _seed_graph(n_min, n_max)
    cur_ratio, cur_witness = _ratio(current)
    best = (cur_ratio, current, cur_witness)
    since_improvement = 0
    for step in range(budget):
        u = rng.randrange(current.n)
        v = rng.randrange(current.n)
        if u == v:
            continue
        removing = current.has_edge(u, v)
        trial = _admissible_flip(current, u, v, removing)
        if trial is None:
            continue
        ratio, witness = _ratio(trial)
        if ratio >= cur_ratio:
            current, cur_ratio, cur_witness = trial, ratio, witness
            if ratio > best[0]:
                best = (ratio, trial, witness)
                since_improvement = 0
                continue
        since_improvement += 1
        if since_improvement >= restart_interval:
            since_improvement = 0
            n = rng.randint(n_min, n_max)
            current = random_admissible(
                n, n - 1 + rng.randint(0, n), CLASS_INDUCED6_FREE,
                seed=rng.randrange(2**31),
            )
            cur_ratio, cur_witness = _ratio(current)

    ratio, g, witness = best
    if find_induced_cycle_of_length(g, 6) is not None or not is_connected(g):
        raise AssertionError("search best violates its class")
    return SearchState(
        best_graph=g,
        best_ratio=(ratio.numerator, ratio.denominator),
        best_witness=witness,
        seed=seed,
        steps=budget,
        schedule={"kind": "hill-climb-restarts", "restart_interval": restart_interval},
    )


def search_report(state: SearchState, inputs: dict) -> RunReport:
    report = RunReport("search", inputs)
    report.add(
        order=state.best_graph.n,
        ratio=f"{state.best_ratio[0]}/{state.best_ratio[1]}",
        witness=list(state.best_witness),
        edges=list(state.best_graph.edges),
        violation=False,
    )
    report.aggregate["best_ratio"] = (
        f"{state.best_ratio[0]}/{state.best_ratio[1]}"
    )
    report.aggregate["steps"] = state.steps
    report.aggregate["schedule"] = state.schedule
    return report.finalize()


def best_instance_text(state: SearchState) -> str:
    header = (
        f"# ratio {state.best_ratio[0]}/{state.best_ratio[1]}"
        f"  witness {','.join(map(str, state.best_witness))}\n"
    )
    return header + to_edge_list(state.best_graph)
