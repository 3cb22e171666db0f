"""Command-line entry point.

Exit status: 0 when every check passes, 1 when any check fails, 2 for usage,
parse or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, harness
from .connectivity import k_sum
from .formats import ParseError, parse_graph, parse_matroid, serialize_matroid
from .graphs import (GraphError, MultiGraph, cut_cover_premise, has_clique_minor,
                     is_3_edge_connected)
from .matroid import Matroid, MatroidError
from .minors import TimeBudgetExceeded, has_minor, has_restriction, isomorphic
from .report import Check, VerificationReport, Witness


class UsageError(Exception):
    pass


def load_matroid(ref: str) -> Matroid:
    """``catalog:NAME`` or a path to a matroid file."""
    if ref.startswith("catalog:"):
        return catalog.get_by_name(ref.split(":", 1)[1])
    try:
        text = Path(ref).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {ref}: {err.strerror}") from err
    try:
        return parse_matroid(text)
    except ParseError as err:
        raise ParseError(f"{ref}: {err}") from err


def load_graph(ref: str) -> MultiGraph:
    try:
        text = Path(ref).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {ref}: {err.strerror}") from err
    try:
        return parse_graph(text)
    except ParseError as err:
        raise ParseError(f"{ref}: {err}") from err


def _emit(report: VerificationReport, args) -> int:
    sys.stdout.write(report.structured() if args.structured else report.human(verbose=True))
    if getattr(args, "figures", None):
        from .plotting import report_figures

        for path in report_figures(report, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return 0 if report.ok else 1


# -- subcommands -----------------------------------------------------------------------

def do_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog.entries():
            m = entry.build()
            if args.structured:
                print(f"entry\t{entry.label}\t{m.n}\t{m.rank()}\t{entry.recipe}")
            else:
                print(f"{entry.label:8} n={m.n:<3} r={m.rank():<3} {entry.recipe}")
        return 0
    if not args.name:
        raise UsageError("catalog show needs a NAME")
    m = catalog.get_by_name(args.name)
    sys.stdout.write(serialize_matroid(m))
    return 0


def do_query(args) -> int:
    if args.graph:
        m = Matroid.from_graph(load_graph(args.graph), name=Path(args.graph).stem)
    elif args.input:
        m = load_matroid(args.input)
    else:
        raise UsageError("query needs --input or --graph")
    sys.stdout.write(harness.cmd_query(m, args.what, args.max_size, args.structured))
    if args.figures and args.what == "triangles":
        from .plotting import triangle_figure

        path = triangle_figure(m, Path(args.figures) / "triangles.png")
        print(f"figure: {path}", file=sys.stderr)
    return 0


def do_sum(args) -> int:
    m1, m2 = load_matroid(args.input), load_matroid(args.other)
    sys.stdout.write(serialize_matroid(k_sum(m1, m2, args.kind)))
    return 0


def do_minor(args) -> int:
    host, target = load_matroid(args.input), load_matroid(args.target)
    name = args.target.split(":", 1)[1] if args.target.startswith("catalog:") else Path(args.target).stem
    report = VerificationReport("restriction" if args.restriction else "minor",
                                [("input", args.input), ("target", args.target)])
    deadline = harness.deadline_after(args.time_budget)
    what = "restriction" if args.restriction else "minor"
    try:
        w = (has_restriction if args.restriction else has_minor)(host, target, deadline)
    except TimeBudgetExceeded:
        check = report.add(Check(f"{name} is a {what}", "fail"))
        check.notes.append("time budget exceeded (inconclusive)")
        return _emit(report, args)
    check = report.add(Check(f"{name} is a {what}", "pass" if w else "fail"))
    if w and args.restriction:
        check.witnesses.append(harness.restriction_witness(host, name, target, w))
    elif w:
        check.witnesses.append(harness.minor_witness(host, name, target, w))
    return _emit(report, args)


def do_iso(args) -> int:
    a, b = load_matroid(args.input), load_matroid(args.other)
    w = isomorphic(a, b)
    report = VerificationReport("iso", [("input", args.input), ("other", args.other)])
    check = report.add(Check("isomorphic", "pass" if w else "fail"))
    if w:
        check.witnesses.append(harness.iso_witness(a, b, w))
    return _emit(report, args)


def _graph_cut_cover(g: MultiGraph, label: str) -> VerificationReport:
    report = VerificationReport("verify claim7", [("graph", label)])
    if not is_3_edge_connected(g):
        check = report.add(Check("cut-cover premise", "skip"))
        check.notes.append("graph is not 3-edge-connected")
        return report
    hits = [v for v in range(g.vertices) if cut_cover_premise(g, v)]
    check = report.add(Check("no vertex meets the cut-cover premise", "fail" if hits else "pass"))
    check.notes.append("vertices meeting the premise: " + (", ".join(map(str, hits)) or "none"))
    return report


def _graph_dirac(g: MultiGraph, label: str) -> VerificationReport:
    report = VerificationReport("verify dirac", [("graph", label)])
    degs = g.degrees()
    if not degs or min(degs) < 3:
        check = report.add(Check("K4 minor", "skip"))
        check.notes.append("minimum degree is below 3")
        return report
    sets = has_clique_minor(g, 4)
    check = report.add(Check("K4 minor", "pass" if sets else "fail"))
    if sets:
        check.witnesses.append(Witness("clique", [("graph", harness.graph_text(g)),
                                                  ("branch_sets", "|".join(",".join(map(str, b))
                                                                           for b in sets))]))
    return report


def do_verify(args) -> int:
    what = args.what
    budget = args.time_budget
    if what == "thm1":
        t = 3 if args.threshold is None else args.threshold
        if args.input:
            report = harness.verify_triangle_minors(load_matroid(args.input), t, budget=budget)
        else:
            report = harness.run_triangle_minors(args.seed, t, budget)
    elif what == "thm2":
        ts = (2, 3) if args.threshold is None else (args.threshold,)
        if args.input:
            report = harness.verify_ternary_triangles(load_matroid(args.input), ts, budget=budget)
        else:
            report = harness.run_ternary_triangles(args.seed, ts, budget)
    elif what == "s5612":
        report = harness.verify_steiner_minors()
    elif what == "catalog":
        report = harness.cmd_catalog_facts()
    elif what in ("claim7", "dirac", "nevo"):
        if args.input:
            g = load_graph(args.input)
            if what == "nevo":
                raise UsageError("verify nevo does not take a single graph")
            report = (_graph_cut_cover if what == "claim7" else _graph_dirac)(g, args.input)
        else:
            run = {"claim7": harness.sweep_cut_cover, "dirac": harness.sweep_dirac,
                   "nevo": harness.sweep_nevo}[what]
            report = run(args.max_n)
    elif what == "axioms":
        report = harness.cmd_axioms(args.seed, args.count)
    else:
        report = harness.cmd_all(args.seed, args.max_n, args.count, budget)
    return _emit(report, args)


VERIFY_HELP = """\
targets:
  thm1     every element in >= t triangles (default 3) gives a U2,4, F7 or MK5 minor
  thm2     GF(3) input, t = 2 and 3: a P7 or MK4 minor, or a U2,4 restriction
  s5612    3-connected minors of the Steiner matroid S(5,6,12)
  catalog  every expected fact of the catalog
  claim7   cut-cover sweep over 3-edge-connected graphs (or one --input graph)
  dirac    min degree >= 3 implies a K4 minor (sweep, or one --input graph)
  nevo     every edge in >= 3 triangles implies a K5 minor (sweep)
  axioms   seeded property suites
  all      everything above except nevo
"""


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true",
                        help="tab-delimited machine-readable output")

    p = argparse.ArgumentParser(
        prog="trimatroid",
        description="Small matroids: catalog, queries, sums, minor search and verification runs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list or show named matroids")
    c.add_argument("action", choices=("list", "show"))
    c.add_argument("name", nargs="?")
    c.set_defaults(run=do_catalog)

    q = sub.add_parser("query", parents=[common], help="rank, circuits, triangles, ...")
    q.add_argument("what", choices=harness.QUERIES)
    q.add_argument("--input", help="matroid file or catalog:NAME")
    q.add_argument("--graph", help="graph file; queries its cycle matroid")
    q.add_argument("--max-size", type=int, help="largest circuit size to list")
    q.add_argument("--figures", metavar="DIR", help="write PNG figures here")
    q.set_defaults(run=do_query)

    s = sub.add_parser("sum", parents=[common], help="1-, 2- or 3-sum of two matroids")
    s.add_argument("kind", type=int, choices=(1, 2, 3))
    s.add_argument("--input", required=True)
    s.add_argument("--other", required=True)
    s.set_defaults(run=do_sum)

    m = sub.add_parser("minor", parents=[common], help="search for a minor or restriction")
    m.add_argument("--input", required=True)
    m.add_argument("--target", required=True)
    m.add_argument("--restriction", action="store_true", help="deletions only")
    m.add_argument("--time-budget", type=float, metavar="SECONDS")
    m.add_argument("--figures", metavar="DIR")
    m.set_defaults(run=do_minor)

    i = sub.add_parser("iso", parents=[common], help="test isomorphism")
    i.add_argument("--input", required=True)
    i.add_argument("--other", required=True)
    i.add_argument("--figures", metavar="DIR")
    i.set_defaults(run=do_iso)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=VERIFY_HELP)
    v.add_argument("what", choices=("thm1", "thm2", "s5612", "catalog", "claim7", "dirac", "nevo",
                                    "axioms", "all"))
    v.add_argument("--input", help="single matroid (thm1, thm2) or graph file (claim7, dirac)")
    v.add_argument("--threshold", type=int, help="triangle threshold t")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--max-n", type=int, default=7, help="largest vertex count for sweeps")
    v.add_argument("--count", type=int, default=1000, help="instances per property suite")
    v.add_argument("--time-budget", type=float, metavar="SECONDS",
                   help="per-check limit for minor searches")
    v.add_argument("--figures", metavar="DIR", help="write PNG summaries here")
    v.set_defaults(run=do_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, ParseError, MatroidError, GraphError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
