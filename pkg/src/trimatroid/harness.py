"""Verification runs that combine the library pieces into reports.

Each ``cmd_*`` function returns a VerificationReport.  Witnesses are written
with the host matroid encoded inline so they can be re-checked later with
``reverify_report`` without any other context.
"""

from __future__ import annotations

import random
import time
from itertools import product

from . import catalog, properties
from .connectivity import tutte_connectivity, find_k_separation
from .field import FieldMatrix, vector_rank
from .formats import decode_matroid, encode_matroid, serialize_matroid
from .graphs import (MultiGraph, cut_cover_counterexample, dirac_counterexample, has_clique_minor,
                     is_clique_model, nevo_counterexample, sweep_graphs)
from .matroid import (Matroid, MatroidError, circuits, dual, is_simple, members, simplify,
                      triangles)
from .minors import (IsoWitness, MinorWitness, RestrictionWitness, TimeBudgetExceeded, has_minor,
                     has_restriction, isomorphic, three_connected_minors)
from .oracles import rank_check_minor, rank_check_restriction
from .report import Check, VerificationReport, Witness, parse_report


class DomainError(MatroidError):
    """Input is outside the domain of a verification command."""


# -- witnesses --------------------------------------------------------------------

def _csv(xs) -> str:
    return ",".join(str(x) for x in xs)


def _uncsv(text: str | None) -> list[int]:
    return [int(x) for x in text.split(",")] if text else []


def minor_witness(host: Matroid, target_name: str, target: Matroid, w: MinorWitness) -> Witness:
    return Witness("minor", [("host", encode_matroid(host)), ("target", target_name),
                             ("target_enc", encode_matroid(target)),
                             ("delete", _csv(members(w.delete))),
                             ("contract", _csv(members(w.contract))),
                             ("iso", _csv(w.iso.mapping))])


def restriction_witness(host: Matroid, target_name: str, target: Matroid,
                        w: RestrictionWitness) -> Witness:
    return Witness("restriction", [("host", encode_matroid(host)), ("target", target_name),
                                   ("target_enc", encode_matroid(target)),
                                   ("subset", _csv(members(w.subset))),
                                   ("iso", _csv(w.iso.mapping))])


def iso_witness(a: Matroid, b: Matroid, w: IsoWitness) -> Witness:
    return Witness("iso", [("host", encode_matroid(a)), ("target_enc", encode_matroid(b)),
                           ("iso", _csv(w.mapping))])


def graph_text(g: MultiGraph) -> str:
    return f"{g.vertices}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def graph_from_text(text: str) -> MultiGraph:
    nv, _, body = text.partition(":")
    edges = [tuple(int(x) for x in e.split("-")) for e in body.split(",")] if body else []
    return MultiGraph.of(int(nv), edges)


def reverify_witness(w: Witness) -> bool:
    """Re-check a serialized witness with the rank-only oracle."""
    if w.kind in ("minor", "restriction", "iso"):
        host = decode_matroid(w.get("host"))
        target = decode_matroid(w.get("target_enc"))
        iso = _uncsv(w.get("iso"))
        if w.kind == "iso":
            return rank_check_minor(host, target, 0, 0, iso)
        if w.kind == "minor":
            d = sum(1 << e for e in _uncsv(w.get("delete")))
            c = sum(1 << e for e in _uncsv(w.get("contract")))
            return rank_check_minor(host, target, d, c, iso)
        s = sum(1 << e for e in _uncsv(w.get("subset")))
        return rank_check_restriction(host, target, s, iso)
    if w.kind == "clique":
        g = graph_from_text(w.get("graph"))
        sets = [_uncsv(b) for b in w.get("branch_sets").split("|")]
        return is_clique_model(g, sets)
    return False


def reverify_report(text: str) -> list[tuple[str, bool]]:
    """``(check name, ok)`` for every re-checkable witness in a structured report."""
    out = []
    for c in parse_report(text).checks:
        for w in c.witnesses:
            if w.kind in ("minor", "restriction", "iso", "clique"):
                out.append((c.name, reverify_witness(w)))
    return out


def deadline_after(budget: float | None) -> float | None:
    return None if budget is None else time.monotonic() + budget


# -- triangle-rich matroids: U2,4 / F7 / M(K5) minors ------------------------------

TRIANGLE_MINOR_TARGETS = ("U2,4", "F7", "MK5")


def verify_triangle_minors(m: Matroid, t: int = 3, label: str | None = None,
             budget: float | None = None) -> VerificationReport:
    """Check that a simple matroid with every element in >= t triangles has a
    U2,4, F7 or M(K5) minor, searching in that order."""
    report = VerificationReport("verify thm1", [("threshold", str(t))])
    report.add(_triangle_minor_check(m, t, label or m.name or "input", deadline_after(budget)))
    return report


def _triangle_minor_check(m: Matroid, t: int, label: str, deadline) -> Check:
    start = time.monotonic()
    check = Check(f"{label} t={t}: U2,4, F7 or MK5 minor", "skip")
    if not is_simple(m):
        check.notes.append("input is not simple")
        return check
    prof = triangles(m)
    check.notes.append(f"n={m.n} rank={m.rank()} triangles per element: min={prof.min_count} "
                       f"max={prof.max_count}")
    if m.n == 0 or prof.min_count < t:
        check.notes.append(f"hypothesis fails: some element lies in fewer than {t} triangles")
        return check
    try:
        for name in TRIANGLE_MINOR_TARGETS:
            target = catalog.get_by_name(name)
            w = has_minor(m, target, deadline)
            if w is not None:
                wit = minor_witness(m, name, target, w)
                check.status = "pass" if reverify_witness(wit) else "fail"
                check.notes.append(f"found a {name} minor")
                check.witnesses.append(wit)
                break
        else:
            check.status = "fail"
            check.notes.append("no U2,4, F7 or M(K5) minor")
    except TimeBudgetExceeded:
        check.status = "fail"
        check.notes.append("time budget exceeded before a witness was found (inconclusive)")
    check.seconds = time.monotonic() - start
    return check


def projective_points(r: int, p: int) -> list[tuple[int, ...]]:
    """Normalized representatives of the points of PG(r-1, p)."""
    out = []
    for v in product(range(p), repeat=r):
        lead = next((a for a in v if a), 0)
        if lead == 1:
            out.append(v)
    return out


def _random_invertible(rng: random.Random, r: int, p: int) -> list[list[int]]:
    while True:
        a = [[rng.randrange(p) for _ in range(r)] for _ in range(r)]
        if vector_rank(a, p) == r:
            return a


def _scramble(rng: random.Random, cols: list[tuple[int, ...]], p: int) -> list[tuple[int, ...]]:
    """Apply a random change of basis and a random column order."""
    r = len(cols[0])
    a = _random_invertible(rng, r, p)
    out = [tuple(sum(a[i][j] * v[j] for j in range(r)) % p for i in range(r)) for v in cols]
    rng.shuffle(out)
    return out


def binary_corpus(seed: int, count: int = 10) -> list[tuple[str, Matroid]]:
    """Random simple binary matroids on <= 12 elements with every element in >= 3 triangles.

    Draws point sets of PG(3,2), keeps those meeting the triangle bound, and
    scrambles each by a random change of basis and column order.
    """
    rng = random.Random(seed)
    pts = projective_points(4, 2)
    seen = set()
    out = []
    while len(out) < count:
        cols = _scramble(rng, rng.sample(pts, rng.randint(9, 12)), 2)
        m = Matroid.from_matrix(FieldMatrix.from_columns(cols, 2, rows=4))
        key = encode_matroid(m)
        if key in seen or triangles(m).min_count < 3:
            continue
        seen.add(key)
        m.name = f"random-binary-{len(out) + 1}"
        out.append((m.name, m))
    return out


def binary_triangle_corpus(seed: int = 1) -> list[tuple[str, Matroid]]:
    fixed = [(x, catalog.get_by_name(x)) for x in ("MK5", "MK6", "F7", "AG23")]
    return fixed + binary_corpus(seed)


def run_triangle_minors(seed: int = 1, t: int = 3, budget: float | None = None) -> VerificationReport:
    report = VerificationReport("verify thm1", [("threshold", str(t)), ("seed", str(seed))])
    for label, m in binary_triangle_corpus(seed):
        report.add(_triangle_minor_check(m, t, label, deadline_after(budget)))
    return report


# -- simple ternary matroids: P7 / M(K4) minor or U2,4 restriction --------------------

def _require_ternary(m: Matroid):
    if m.kind != "linear" or m.payload.field.p != 3:
        raise DomainError(f"{m.name or 'input'} is not given by a GF(3) matrix")


def verify_ternary_triangles(m: Matroid, thresholds=(2, 3), label: str | None = None,
             budget: float | None = None) -> VerificationReport:
    """Check that a simple GF(3)-represented matroid with every element in >= t
    triangles has a P7 minor, an M(K4) minor, or a U2,4 restriction."""
    _require_ternary(m)
    report = VerificationReport("verify thm2", [("thresholds", _csv(thresholds))])
    for t in thresholds:
        report.add(_ternary_check(m, t, label or m.name or "input", deadline_after(budget)))
    return report


def _ternary_check(m: Matroid, t: int, label: str, deadline) -> Check:
    _require_ternary(m)
    start = time.monotonic()
    check = Check(f"{label} t={t}: P7 or MK4 minor, or U2,4 restriction", "skip")
    if not is_simple(m):
        check.notes.append("input is not simple")
        return check
    prof = triangles(m)
    check.notes.append(f"n={m.n} rank={m.rank()} triangles per element: min={prof.min_count} "
                       f"max={prof.max_count}")
    if m.n == 0 or prof.min_count < t:
        check.notes.append(f"hypothesis fails: some element lies in fewer than {t} triangles")
        return check
    try:
        found = None
        for name in ("P7", "MK4"):
            target = catalog.get_by_name(name)
            w = has_minor(m, target, deadline)
            if w is not None:
                found = (f"found a {name} minor", minor_witness(m, name, target, w))
                break
        if found is None:
            target = catalog.get_by_name("U2,4")
            w = has_restriction(m, target, deadline)
            if w is not None:
                found = ("found a U2,4 restriction", restriction_witness(m, "U2,4", target, w))
        if found is None:
            check.status = "fail"
            check.notes.append("no P7 minor, M(K4) minor or U2,4 restriction")
        else:
            check.notes.append(found[0])
            check.witnesses.append(found[1])
            check.status = "pass" if reverify_witness(found[1]) else "fail"
    except TimeBudgetExceeded:
        check.status = "fail"
        check.notes.append("time budget exceeded before a witness was found (inconclusive)")
    check.seconds = time.monotonic() - start
    return check


def ternary_corpus(seed: int, count: int = 8, t: int = 2) -> list[tuple[str, Matroid]]:
    """Random simple GF(3) matroids on <= 10 elements with every element in >= t triangles.

    Point sets in PG(2,3) or PG(3,3) are grown by repeatedly adding points on
    the line through two chosen points, then kept if they meet the bound.
    Classes are pairwise non-isomorphic.
    """
    from .minors import canonical_form

    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        r = rng.choice((3, 3, 4))
        pts = projective_points(r, 3)
        size = rng.randint(7, 10)
        chosen = list(rng.sample(pts, 2))
        while len(chosen) < size:
            x, y = rng.sample(chosen, 2) if rng.random() < 0.7 else (rng.choice(chosen),
                                                                     rng.choice(pts))
            z = tuple((a + rng.choice((1, 2)) * b) % 3 for a, b in zip(x, y))
            lead = next((a for a in z if a), 0)
            if not lead:
                continue
            z = tuple((a * lead) % 3 for a in z)     # lead is its own inverse mod 3
            if z not in chosen:
                chosen.append(z)
        m = Matroid.from_matrix(FieldMatrix.from_columns(_scramble(rng, chosen, 3), 3, rows=r))
        if m.rank() < 3 or triangles(m).min_count < t:
            continue
        key = canonical_form(m)
        if key in seen:
            continue
        seen.add(key)
        m.name = f"random-ternary-{len(out) + 1}"
        out.append((m.name, m))
    return out


def ternary_triangle_corpus(seed: int = 1) -> list[tuple[str, Matroid]]:
    fixed = [("AG23", catalog.get("AG23")), ("U2,4", catalog.get("TU", 2, 4)),
             ("U2,5", catalog.get("TU", 2, 5))]
    return fixed + ternary_corpus(seed)


def run_ternary_triangles(seed: int = 1, thresholds=(2, 3), budget: float | None = None) -> VerificationReport:
    report = VerificationReport("verify thm2", [("thresholds", _csv(thresholds)),
                                                ("seed", str(seed))])
    for label, m in ternary_triangle_corpus(seed):
        try:
            _require_ternary(m)
        except DomainError as err:
            check = report.add(Check(f"{label}: P7 or MK4 minor, or U2,4 restriction", "skip"))
            check.notes.append(f"excluded: {err}")
            continue
        for t in thresholds:
            report.add(_ternary_check(m, t, label, deadline_after(budget)))
    return report


# -- S(5,6,12) ----------------------------------------------------------------------

def _classify(rep: Matroid) -> str:
    if rep.n <= 3:
        return "small"
    if rep.n % 2 == 0 and isomorphic(rep, catalog.get("W", rep.n // 2)) is not None:
        return "whirl"
    return "counted"


def verify_steiner_minors() -> VerificationReport:
    """Every 3-connected minor of S(5,6,12) has two elements each in at most one
    triangle, or has a P7 minor."""
    report = VerificationReport("verify s5612")
    m = catalog.get("S5612")
    start = time.monotonic()
    construct = report.add(Check("S5612 construction: 132 hexads, each 5-set in exactly one",
                                 "pass" if catalog.steiner_blocks_ok(m) else "fail"))
    construct.seconds = time.monotonic() - start

    start = time.monotonic()
    classes = three_connected_minors(m)
    p7 = catalog.get("P7")
    rows = []
    for _, rep in classes:
        poor = len(catalog.poor_elements(rep))
        has_p7 = has_minor(rep, p7) is not None
        rows.append((rep, _classify(rep), poor, has_p7, poor >= 2 or has_p7))
    rows.sort(key=lambda row: (row[0].n, row[0].rank()))
    elapsed = time.monotonic() - start

    counted = [row for row in rows if row[1] == "counted"]
    hard = report.add(Check("S5612 3-connected minor classes satisfy the disjunction "
                            "(classes with >= 4 elements, whirls excluded)",
                            "pass" if all(row[4] for row in counted) else "fail"))
    hard.seconds = elapsed
    for rep, kind, poor, has_p7, ok in rows:
        prof = triangles(rep)
        hard.notes.append(f"class n={rep.n} r={rep.rank()} kind={kind} triangles={len(prof.triangles)} "
                          f"poor={poor} p7={'yes' if has_p7 else 'no'} "
                          f"verdict={'ok' if ok else 'fails'}")
    literal = [row for row in rows if not row[4]]
    hard.notes.append("over all nonempty classes, the disjunction fails only for: " +
                      (", ".join(f"n={r.n} r={r.rank()} ({k})" for r, k, *_ in literal) or "none"))

    itself = any(isomorphic(rep, m) is not None for rep, *_ in rows if rep.n == m.n)
    report.add(Check("S5612 appears among its own 3-connected minors",
                     "pass" if itself else "fail"))

    big = [row for row in rows if row[0].n >= 4]
    count = report.add(Check("S5612 class count against 15 (informational)",
                             "pass" if len(counted) == 15 else "skip"))
    count.notes.append(f"nonempty 3-connected classes: {len(rows)}")
    count.notes.append(f"with at least 4 elements: {len(big)}")
    count.notes.append(f"with at least 4 elements, whirls excluded: {len(counted)}")
    return report


# -- catalog, graph sweeps, property suites ----------------------------------------------

def cmd_catalog_facts() -> VerificationReport:
    report = VerificationReport("verify catalog")
    for entry in catalog.entries():
        m = entry.build()
        for fact in entry.facts:
            start = time.monotonic()
            ok = bool(fact.check(m))
            check = report.add(Check(f"catalog {entry.label}: {fact.name}", "pass" if ok else "fail"))
            check.notes.append(f"source={fact.source}")
            check.seconds = time.monotonic() - start
    return report


def _sweep(command: str, name: str, nmax: int, predicate) -> VerificationReport:
    if nmax > 7:
        raise DomainError("exhaustive sweeps are limited to 7 vertices")
    report = VerificationReport(command, [("max-n", str(nmax))])
    start = time.monotonic()
    res = sweep_graphs(nmax, predicate)
    check = report.add(Check(name, "pass" if res.ok else "fail"))
    check.seconds = time.monotonic() - start
    check.notes.append(f"graphs checked: {res.graphs_checked} "
                       f"({', '.join(f'n={n}: {c}' for n, c in sorted(res.per_n.items()))})")
    check.notes.append(f"witnesses: {len(res.witnesses)}")
    for g in res.witnesses:
        check.witnesses.append(Witness("graph", [("graph", graph_text(g))]))
    return report


def sweep_cut_cover(nmax: int = 7) -> VerificationReport:
    return _sweep("verify claim7", f"no 3-edge-connected simple graph on <= {nmax} vertices has a "
                  "vertex v with every edge of G - v in a non-trivial 3-edge cut",
                  nmax, cut_cover_counterexample)


def sweep_dirac(nmax: int = 7) -> VerificationReport:
    report = _sweep("verify dirac", f"every simple graph on <= {nmax} vertices with minimum "
                    "degree >= 3 has a K4 minor", nmax, dirac_counterexample)
    # one positive sample with a re-checkable model
    g = MultiGraph.of(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    sets = has_clique_minor(g, 4)
    check = report.checks[0]
    check.witnesses.append(Witness("clique", [("graph", graph_text(g)),
                                              ("branch_sets", "|".join(_csv(b) for b in sets))]))
    return report


def sweep_nevo(nmax: int = 7) -> VerificationReport:
    return _sweep("verify nevo", f"every simple graph on <= {nmax} vertices with each edge in >= 3 "
                  "triangles has a K5 minor", nmax, nevo_counterexample)


def cmd_axioms(seed: int = 1, count: int = 1000) -> VerificationReport:
    report = VerificationReport("verify axioms", [("seed", str(seed)), ("count", str(count))])
    for name in properties.SUITE_NAMES:
        start = time.monotonic()
        res = properties.run_suites(seed, count, [name])[0]
        check = report.add(Check(f"property: {name}", "fail" if res.violations else "pass"))
        check.seconds = time.monotonic() - start
        check.notes.append(f"instances: {res.instances}, violations: {len(res.violations)}")
        check.notes.extend(res.violations[:5])
    return report


def cmd_all(seed: int = 1, nmax: int = 7, count: int = 1000,
            budget: float | None = None) -> VerificationReport:
    report = VerificationReport("verify all", [("seed", str(seed)), ("max-n", str(nmax)),
                                               ("count", str(count))])
    parts = [cmd_catalog_facts(), verify_steiner_minors(), run_triangle_minors(seed, 3, budget),
             run_ternary_triangles(seed, (2, 3), budget), sweep_cut_cover(nmax), sweep_dirac(nmax),
             cmd_axioms(seed, count)]
    for part in parts:
        report.extend(part)
    return report


# -- queries ------------------------------------------------------------------------------

QUERIES = ("rank", "circuits", "triangles", "connectivity", "dual", "simplify")


def cmd_query(m: Matroid, what: str, max_size: int | None = None,
              structured: bool = False) -> str:
    """Thin pass-through to library calls; returns the text to print."""
    if what not in QUERIES:
        raise DomainError(f"unknown query {what!r}; expected one of {', '.join(QUERIES)}")
    rows: list[tuple[str, ...]] = []
    if what == "rank":
        rows = [("n", str(m.n)), ("rank", str(m.rank())), ("corank", str(m.corank()))]
    elif what == "circuits":
        fam = circuits(m, max_size)
        rows = [("count", str(len(fam)))]
        rows += [("circuit", " ".join(m.labels[e] for e in members(c))) for c in fam]
    elif what == "triangles":
        prof = triangles(m)
        if m.n:
            rows = [("min", str(prof.min_count)), ("max", str(prof.max_count))]
        rows += [("triangles", str(len(prof.triangles)))]
        rows += [("element", m.labels[e], str(k)) for e, k in enumerate(prof.counts)]
    elif what == "connectivity":
        lam = tutte_connectivity(m)
        if lam == float("inf"):
            rows = [("lambda", "infinity"), ("3-connected", "yes")]
        else:
            sep = find_k_separation(m, int(lam))
            rows = [("lambda", str(int(lam))), ("3-connected", "yes" if lam >= 3 else "no"),
                    ("separation", " ".join(m.labels[e] for e in members(sep.x)),
                     " ".join(m.labels[e] for e in members(sep.y)))]
    elif what == "dual":
        return serialize_matroid(dual(m))
    elif what == "simplify":
        smap = simplify(m)
        text = serialize_matroid(smap.matroid)
        if structured:
            extra = [f"representative\t{m.labels[e]}\t{m.labels[r]}"
                     for e, r in sorted(smap.representative.items())]
            extra += [f"loop\t{m.labels[e]}" for e in members(smap.loops)]
            return text + "".join(x + "\n" for x in extra)
        return text
    if structured:
        return "".join("\t".join(r) + "\n" for r in rows)
    return _human_rows(what, rows)


def _human_rows(what: str, rows) -> str:
    head = {k: v for k, v, *_ in rows}
    out = []
    if what == "triangles" and "min" in head:
        out.append(f"min={head['min']} max={head['max']}  ({head['triangles']} triangles)")
    elif what == "connectivity":
        if head["lambda"] == "infinity":
            out.append("lambda=infinity (3-connected)")
        else:
            out.append(f"lambda={head['lambda']}" + (" (3-connected)" if head["3-connected"] == "yes"
                                                     else ""))
    elif what == "rank":
        out.append(f"rank={head['rank']} corank={head['corank']} n={head['n']}")
    elif what == "circuits":
        out.append(f"{head['count']} circuits")
    body = [r for r in rows if r[0] in ("element", "circuit", "separation")]
    if body:
        width = max(len(r[1]) for r in body)
        for r in body:
            line = "  " + r[0].ljust(10) + r[1].ljust(width + 2) + " ".join(r[2:])
            out.append(line.rstrip())
    if what == "triangles" and "min" not in head:
        out.append("empty ground set")
    return "\n".join(out) + "\n"
