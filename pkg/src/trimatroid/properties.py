"""Seeded randomized property suites over small matroids.

Each suite draws ``count`` instances from its own ``random.Random`` stream
(seeded from the suite name and the global seed) and returns the number of
instances checked plus a description of every violation.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .connectivity import (Separation, SumError, check_sum, SumSpec, decompose_two_sum,
                           same_labelled_circuits, two_sum)
from .field import FieldMatrix
from .graphs import MultiGraph
from .matroid import (Matroid, as_circuit_matroid, dual, is_binary_fournier, is_simple, mask_of,
                      members, minor, popcount, relabel, same_circuits, simplify, triangles,
                      with_labels)
from .minors import has_minor, isomorphic, verify_minor
from .oracles import naive_circuits, rank_check_minor, representation_search


# -- instance generators ---------------------------------------------------------

def random_matrix_matroid(rng: random.Random, n: int, p: int, max_rank: int = 4) -> Matroid:
    rows = rng.randint(0, min(max_rank, n)) if n else 0
    entries = [[rng.randrange(p) for _ in range(n)] for _ in range(rows)]
    return Matroid.from_matrix(FieldMatrix.from_rows(entries, p, cols=n))


def random_graph(rng: random.Random, n_edges: int, max_vertices: int = 5) -> MultiGraph:
    v = rng.randint(1, max_vertices)
    edges = []
    for _ in range(n_edges):
        a = rng.randrange(v)
        b = a if rng.random() < 0.05 or v == 1 else rng.randrange(v)
        edges.append((a, b))
    return MultiGraph.of(v, edges)


def random_matroid(rng: random.Random, nmin: int = 0, nmax: int = 8) -> Matroid:
    """A small matroid from a randomly chosen backend."""
    n = rng.randint(nmin, nmax)
    kind = rng.choice(("gf2", "gf3", "gf5", "graph", "bond", "uniform", "circuits"))
    if kind.startswith("gf"):
        return random_matrix_matroid(rng, n, int(kind[2:]))
    if kind in ("graph", "bond"):
        g = random_graph(rng, n)
        return Matroid.from_graph(g) if kind == "graph" else Matroid.from_bond(g)
    if kind == "uniform":
        return Matroid.uniform(rng.randint(0, n), n)
    base = random_matroid(rng, n, n)
    while base.kind == "circuits":
        base = random_matroid(rng, n, n)
    perm = list(range(n))
    rng.shuffle(perm)
    return as_circuit_matroid(relabel(base, perm))


def random_subset(rng: random.Random, n: int, p: float = 0.5) -> int:
    return mask_of(e for e in range(n) if rng.random() < p)


def _catalog_pool() -> list[Matroid]:
    names = ["U2,4", "U2,5", "U3,5", "U3,6", "F7", "F7*", "MK4", "MK5", "MK33", "AG23", "P7",
             "R10", "J", "W3", "W4", "W5", "Wheel3", "Wheel4", "Wheel5", "TW3", "TU2,4"]
    return [catalog.get_by_name(x) for x in names]


# -- suites ---------------------------------------------------------------------------

def rank_axioms(rng: random.Random) -> str | None:
    m = random_matroid(rng)
    other = as_circuit_matroid(m) if m.kind != "circuits" else None
    if m.rank(0) != 0:
        return f"{m!r}: r(empty) != 0"
    for _ in range(8):
        s, t = random_subset(rng, m.n), random_subset(rng, m.n)
        rs, rt = m.rank(s), m.rank(t)
        if not 0 <= rs <= popcount(s):
            return f"{m!r}: bound fails on {members(s)}"
        if rs > m.rank(s | t):
            return f"{m!r}: not monotone on {members(s)} in {members(s | t)}"
        if m.rank(s | t) + m.rank(s & t) > rs + rt:
            return f"{m!r}: not submodular on {members(s)}, {members(t)}"
        for e in range(m.n):
            if m.rank(s | 1 << e) - rs not in (0, 1):
                return f"{m!r}: adding {e} to {members(s)} jumps the rank"
        if other is not None and other.rank(s) != rs:
            return f"{m!r}: circuit backend disagrees on {members(s)}"
    return None


def circuit_elimination(rng: random.Random) -> str | None:
    m = random_matroid(rng)
    circ = m.circuit_masks()
    if 0 in circ:
        return f"{m!r}: empty circuit"
    if m.n <= 7 and sorted(circ) != sorted(naive_circuits(m)):
        return f"{m!r}: circuits differ from the exhaustive scan"
    for i, a in enumerate(circ):
        for b in circ[i + 1:]:
            if a & b == a or a & b == b:
                return f"{m!r}: nested circuits {members(a)}, {members(b)}"
            for e in members(a & b):
                rest = (a | b) & ~(1 << e)
                if not any(c & rest == c for c in circ):
                    return f"{m!r}: elimination fails for {members(a)}, {members(b)} at {e}"
    return None


def duality(rng: random.Random) -> str | None:
    m = random_matroid(rng)
    d = dual(m)
    if d.rank() != m.n - m.rank():
        return f"{m!r}: dual rank {d.rank()}"
    for _ in range(8):
        x = random_subset(rng, m.n)
        want = popcount(x) + m.rank(m.full & ~x) - m.rank()
        if d.rank(x) != want:
            return f"{m!r}: dual rank of {members(x)} is {d.rank(x)}, expected {want}"
    if not same_circuits(dual(d), m):
        return f"{m!r}: double dual changes the circuits"
    return None


def fournier_vs_representation(rng: random.Random, pool: list[Matroid]) -> str | None:
    base = rng.choice(pool)
    d = c = 0
    for e in range(base.n):
        u = rng.random()
        if u < 0.15:
            d |= 1 << e
        elif u < 0.3:
            c |= 1 << e
    m = minor(base, d, c)
    perm = list(range(m.n))
    rng.shuffle(perm)
    m = relabel(m, perm)
    fournier = is_binary_fournier(m)
    rep = representation_search(m, 2)
    if fournier != (rep is not None):
        return f"{base.name} minor D={members(d)} C={members(c)}: Fournier says {fournier}"
    if rep is not None and not same_circuits(Matroid.from_matrix(rep), m):
        return f"{base.name} minor D={members(d)} C={members(c)}: representation is wrong"
    return None


def _operand(rng: random.Random, prefix: str, nmin: int, nmax: int, simple: bool = False) -> Matroid:
    """Random operand with basepoint label ``z`` that is neither a loop nor a coloop."""
    while True:
        n = rng.randint(nmin, nmax)
        m = random_matrix_matroid(rng, n, rng.choice((2, 3)), max_rank=n - 1)
        if simple and not is_simple(m):
            continue
        z = rng.randrange(n)
        if m.rank(1 << z) == 0 or m.rank(m.full & ~(1 << z)) < m.rank():
            continue
        labels = [f"{prefix}{i}" for i in range(n)]
        labels[z] = "z"
        return with_labels(m, labels)


def _random_two_sum(rng: random.Random, simple: bool):
    while True:
        m1 = _operand(rng, "a", 3, 6, simple)
        m2 = _operand(rng, "b", 3, 6, simple)
        try:
            check_sum(SumSpec(2, m1, m2))
        except SumError:
            continue
        s = two_sum(m1, m2)
        if simple and not is_simple(s):
            continue
        return m1, m2, s


def two_sum_round_trip(rng: random.Random) -> str | None:
    m1, m2, s = _random_two_sum(rng, simple=False)
    x = mask_of(i for i, lab in enumerate(s.labels) if lab.startswith("a"))
    n1, n2, _ = decompose_two_sum(s, Separation(x, s.full & ~x, 2, True))
    if isomorphic(n1, m1) is None or isomorphic(n2, m2) is None:
        return f"2-sum of {m1.n}+{m2.n} elements: operands not recovered"
    if not same_labelled_circuits(two_sum(n1, n2), s):
        return f"2-sum of {m1.n}+{m2.n} elements: re-summing changes the circuits"
    return None


def triangle_lifting(rng: random.Random) -> str | None:
    m1, _, s = _random_two_sum(rng, simple=True)
    z = m1.labels.index("z")
    smap = simplify(m1)
    si_index = {m1.labels[e]: i for i, e in enumerate(smap.kept)}
    in_si = triangles(smap.matroid).counts
    in_sum = triangles(s).counts
    where = {lab: i for i, lab in enumerate(s.labels)}
    for e in range(m1.n):
        if e == z or m1.rank(1 << e | 1 << z) < 2:
            continue
        lab = m1.labels[e]
        if in_si[si_index[lab]] < in_sum[where[lab]]:
            return f"element {lab}: {in_si[si_index[lab]]} triangles in si(M1), {in_sum[where[lab]]} in the sum"
    return None


def minor_soundness(rng: random.Random) -> str | None:
    m = random_matroid(rng, 1, 8)
    d = c = 0
    for e in range(m.n):
        u = rng.random()
        if u < 0.25:
            d |= 1 << e
        elif u < 0.5:
            c |= 1 << e
    target = minor(m, d, c)
    perm = list(range(target.n))
    rng.shuffle(perm)
    target = relabel(target, perm)
    w = has_minor(m, target)
    if w is None:
        return f"{m!r}: missed the minor D={members(d)} C={members(c)}"
    if not verify_minor(m, target, w) or not rank_check_minor(m, target, w.delete, w.contract,
                                                              w.iso.mapping):
        return f"{m!r}: witness D={members(w.delete)} C={members(w.contract)} does not check out"
    return None


@dataclass
class SuiteResult:
    name: str
    instances: int
    violations: list[str] = field(default_factory=list)


def _suites() -> list[tuple[str, Callable[[random.Random], str | None]]]:
    pool = _catalog_pool()
    return [
        ("rank axioms", rank_axioms),
        ("circuit elimination", circuit_elimination),
        ("duality involution", duality),
        ("Fournier agrees with GF(2) representability",
         lambda rng: fournier_vs_representation(rng, pool)),
        ("2-sum round trip", two_sum_round_trip),
        ("triangle lifting through 2-sums", triangle_lifting),
        ("minor witness soundness", minor_soundness),
    ]


SUITE_NAMES = ["rank axioms", "circuit elimination", "duality involution",
               "Fournier agrees with GF(2) representability", "2-sum round trip",
               "triangle lifting through 2-sums", "minor witness soundness"]


def run_suites(seed: int, count: int, only: list[str] | None = None) -> list[SuiteResult]:
    out = []
    for name, check in _suites():
        if only is not None and name not in only:
            continue
        rng = random.Random(zlib.crc32(name.encode()) ^ seed)
        res = SuiteResult(name, 0)
        for _ in range(count):
            res.instances += 1
            problem = check(rng)
            if problem:
                res.violations.append(problem)
        out.append(res)
    return out
