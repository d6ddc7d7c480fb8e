"""Command-line surface.

Subcommands: ``compute`` (exact isolation numbers), ``verify`` (check a
witness), ``construct`` (certified quarter-order witnesses, tracks thm16 =
no 6-cycles and thm17 = no induced 5-/6-cycles), ``extremal`` (build the
tight pendant-gadget family), ``scan`` (exhaustive bound checks), and
``search`` (ratio hill climbing).

Exit codes: 0 success / no violations, 1 violations found, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from .graph import Graph, Special, path_graph, cycle_graph, star_graph, complete_graph
from .exact import is_isolating, isolation_number
from .constructive import (
    ContainsForbiddenCycle,
    PreconditionViolation,
    construct_c6_free,
    construct_induced56_free,
)
from .generators import ExtremalSpec, build_extremal, BadSpec, InadmissibleBackbone
from .formats import (
    ParseError,
    VertexOutOfRange,
    read_graph_file,
    write_edge_list,
)
from .harness import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATIONS,
    RunReport,
    SCAN_ASSERTIONS,
    best_instance_text,
    hill_climb,
    scan_assertion,
    search_report,
)

KIND_NAMES = {k.value.lower(): k for k in Special}
BACKBONES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": lambda t: star_graph(t - 1),
    "complete": complete_graph,
}


def _emit(report: RunReport, args) -> None:
    if args.json:
        sys.stdout.write(report.to_json(include_timings=args.timings))
    else:
        sys.stdout.write(report.to_text())


def _exit_for(report: RunReport) -> int:
    return EXIT_VIOLATIONS if report.aggregate.get("violations") else EXIT_OK


def _ms(t0: float) -> int:
    return int((time.monotonic() - t0) * 1000)


def cmd_compute(args) -> int:
    report = RunReport("compute", {"file": args.file, "k": args.k})
    for label, g in read_graph_file(args.file):
        t0 = time.monotonic()
        cert = isolation_number(g, args.k)
        report.add(
            graph=label,
            order=g.n,
            size=cert.size,
            witness=sorted(cert.witness),
            residual_max_degree=cert.residual_max_degree,
            time_ms=_ms(t0),
        )
    _emit(report.finalize(), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    witness = [int(p) for p in args.witness.split(",") if p != ""]
    report = RunReport(
        "verify", {"file": args.file, "k": args.k, "witness": witness}
    )
    for label, g in read_graph_file(args.file):
        for v in witness:
            if not 0 <= v < g.n:
                raise VertexOutOfRange(f"witness vertex {v} outside [0,{g.n})")
        t0 = time.monotonic()
        ok, rd = is_isolating(g, witness, args.k)
        report.add(
            graph=label,
            order=g.n,
            isolating=ok,
            residual_max_degree=rd,
            violation=not ok,
            time_ms=_ms(t0),
        )
    report.finalize()
    _emit(report, args)
    return _exit_for(report)


def cmd_construct(args) -> int:
    fn = construct_c6_free if args.track == "thm16" else construct_induced56_free
    report = RunReport("construct", {"file": args.file, "track": args.track})
    for label, g in read_graph_file(args.file):
        t0 = time.monotonic()
        try:
            witness, trace = fn(g)
        except ContainsForbiddenCycle as exc:
            report.add(
                graph=label,
                order=g.n,
                rejected=str(exc),
                cycle=list(exc.witness.vertices) if exc.witness else None,
                violation=False,
                time_ms=_ms(t0),
            )
            continue
        except PreconditionViolation as exc:
            report.add(
                graph=label, order=g.n, rejected=str(exc), violation=False,
                time_ms=_ms(t0),
            )
            continue
        ok, rd = is_isolating(g, witness, 1)
        record = dict(
            graph=label,
            order=g.n,
            size=len(witness),
            bound=g.n // 4,
            witness=sorted(witness),
            verified=ok,
            violation=not ok or len(witness) > g.n // 4,
            time_ms=_ms(t0),
        )
        if args.trace:
            record["trace"] = [
                {"case": s.label, "fragment": list(s.fragment), "note": s.note}
                for s in trace.steps
            ]
        report.add(**record)
    report.finalize()
    _emit(report, args)
    return _exit_for(report)


def cmd_extremal(args) -> int:
    kinds = []
    for name in args.kinds.split(","):
        key = name.strip().lower()
        if key not in KIND_NAMES:
            raise BadSpec(f"unknown gadget kind {name!r} (use p3,c3,c7,c11)")
        kinds.append(KIND_NAMES[key])
    if len(kinds) == 1 and args.t > 1:
        kinds = kinds * args.t
    backbone = BACKBONES[args.backbone](args.t) if args.t > 1 else Graph(1)
    spec = ExtremalSpec(backbone, tuple(kinds), leaves=args.leaves)
    inst = build_extremal(spec)
    write_edge_list(inst.graph, args.out)
    report = RunReport(
        "extremal",
        {
            "t": args.t,
            "kinds": [k.value for k in kinds],
            "backbone": args.backbone,
            "leaves": args.leaves,
            "out": args.out,
        },
    )
    ok, rd = is_isolating(inst.graph, inst.designated_witness, 1)
    report.add(
        order=inst.graph.n,
        witness=sorted(inst.designated_witness),
        size=len(inst.designated_witness),
        verified=ok,
        violation=not ok,
    )
    report.finalize()
    _emit(report, args)
    return _exit_for(report)


def cmd_scan(args) -> int:
    report = scan_assertion(args.nmax, getattr(args, "assert"), k=args.k)
    _emit(report, args)
    return _exit_for(report)


def cmd_search(args) -> int:
    state = hill_climb(
        args.nmin, args.nmax, args.budget, args.seed,
        restart_interval=args.restart_interval,
    )
    report = search_report(
        state,
        {
            "class": args.search_class,
            "nmin": args.nmin,
            "nmax": args.nmax,
            "budget": args.budget,
            "seed": args.seed,
            "restart_interval": args.restart_interval,
        },
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(best_instance_text(state))
    _emit(report, args)
    return _exit_for(report)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="isoset",
        description="isolating sets: exact solvers, certified bounds, scans",
    )
    top.add_argument("--json", action="store_true", help="emit a JSON report")
    top.add_argument(
        "--timings", action="store_true",
        help="include wall-clock timings in JSON reports (breaks byte-equality)",
    )
    # the global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS
    )
    common.add_argument(
        "--timings", action="store_true", default=argparse.SUPPRESS
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("compute", help="exact isolation number per graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("file")
    p.set_defaults(fn=cmd_compute)

    p = add_parser("verify", help="check that a witness k-isolates")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--witness", required=True, help="comma-separated vertices")
    p.add_argument("file")
    p.set_defaults(fn=cmd_verify)

    p = add_parser("construct", help="certified quarter-order witness")
    p.add_argument("--track", choices=("thm16", "thm17"), required=True)
    p.add_argument("--trace", action="store_true", help="include the case trace")
    p.add_argument("file")
    p.set_defaults(fn=cmd_construct)

    p = add_parser("extremal", help="build a tight pendant-gadget instance")
    p.add_argument("--t", type=int, required=True, help="backbone order")
    p.add_argument(
        "--kinds", required=True,
        help="comma-separated gadget kinds (p3,c3,c7,c11); one value repeats",
    )
    p.add_argument("--backbone", choices=sorted(BACKBONES), default="path")
    p.add_argument("--leaves", type=int, default=0, choices=(0, 1, 2, 3))
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_extremal)

    p = add_parser("scan", help="exhaustive bound check on small graphs")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--assert", choices=SCAN_ASSERTIONS, required=True)
    p.add_argument("--k", type=int, default=1, help="isolation order (thm11)")
    p.set_defaults(fn=cmd_scan)

    p = add_parser("search", help="hill-climb the ratio iota_1/n")
    p.add_argument(
        "--class", dest="search_class", choices=("induced6free",),
        default="induced6free",
    )
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--restart-interval", type=int, default=400)
    p.add_argument("--out", help="write the best instance as an edge list")
    p.set_defaults(fn=cmd_search)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, VertexOutOfRange, BadSpec, InadmissibleBackbone, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
