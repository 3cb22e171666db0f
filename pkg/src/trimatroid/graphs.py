"""Multigraphs, their cycle and bond matroids, and exhaustive graph checks.

Everything here is brute force over vertex subsets, which is exact and
fast enough for graphs on a dozen or so vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .canon import canonical_labeling
from .matroid import Matroid, members, popcount

MAX_CUT_VERTICES = 16
MAX_MINOR_VERTICES = 12


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    """Vertices ``0..vertices-1``; edges may repeat and may be loops."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{self.vertices - 1}")

    @classmethod
    def of(cls, vertices: int, edges: Iterable[Sequence[int]]) -> MultiGraph:
        return cls(vertices, tuple((int(u), int(v)) for u, v in edges))

    def with_edges(self, edges) -> MultiGraph:
        return MultiGraph.of(self.vertices, edges)

    def subgraph_edges(self, kept: Sequence[int]) -> MultiGraph:
        return MultiGraph(self.vertices, tuple(self.edges[i] for i in kept))

    def contract_edges(self, s: int, kept: Sequence[int]) -> MultiGraph:
        """Identify the ends of every edge in mask ``s``; keep edges ``kept``."""
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in members(s):
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        roots = sorted({find(v) for v in range(self.vertices)})
        new = {r: i for i, r in enumerate(roots)}
        return MultiGraph(len(roots), tuple((new[find(self.edges[i][0])], new[find(self.edges[i][1])])
                                             for i in kept))

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def adjacency(self) -> list[int]:
        adj = [0] * self.vertices
        for u, v in self.edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def delete_vertex(self, v: int) -> MultiGraph:
        relabel = {u: (u if u < v else u - 1) for u in range(self.vertices) if u != v}
        return MultiGraph(self.vertices - 1, tuple((relabel[a], relabel[b]) for a, b in self.edges
                                                   if v not in (a, b)))

    def induced(self, vs: Iterable[int]) -> MultiGraph:
        vs = sorted(vs)
        idx = {v: i for i, v in enumerate(vs)}
        return MultiGraph(len(vs), tuple((idx[a], idx[b]) for a, b in self.edges if a in idx and b in idx))


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.of(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.of(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.of(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(spokes: int) -> MultiGraph:
    """Hub 0, rim vertices 1..spokes; edges are spoke i then rim i."""
    edges = []
    for i in range(spokes):
        edges.append((0, i + 1))
        edges.append((i + 1, (i + 1) % spokes + 1))
    return MultiGraph.of(spokes + 1, edges)


def prism_graph() -> MultiGraph:
    return MultiGraph.of(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def graphic(g: MultiGraph) -> Matroid:
    return Matroid.from_graph(g)


def bond(g: MultiGraph) -> Matroid:
    return Matroid.from_bond(g)


def triangles_through_edges(g: MultiGraph) -> list[int]:
    """Number of 3-cycles through each edge of a simple graph."""
    adj = g.adjacency()
    return [popcount(adj[u] & adj[v]) for u, v in g.edges]


# -- clique minors ---------------------------------------------------------

def _connected(mask: int, adj: Sequence[int]) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def has_clique_minor(g: MultiGraph, r: int) -> list[list[int]] | None:
    """Branch sets of a ``K_r`` minor, or None.

    Branch sets are chosen among connected vertex subsets in order of their
    least vertex, which removes the r! relabelings of the same model.
    """
    if r > 6 or g.vertices > MAX_MINOR_VERTICES:
        raise GraphError(f"clique-minor search is capped at r <= 6 and {MAX_MINOR_VERTICES} vertices")
    if r <= 0:
        return []
    n = g.vertices
    if n < r:
        return None
    adj = g.adjacency()
    sets = [s for s in range(1, 1 << n) if _connected(s, adj)]
    sets.sort(key=lambda s: ((s & -s).bit_length(), popcount(s), s))
    boundary = {}
    for s in sets:
        nb = 0
        for v in members(s):
            nb |= adj[v]
        boundary[s] = nb & ~s
    chosen: list[int] = []

    def grow(used: int, last_min: int) -> bool:
        if len(chosen) == r:
            return True
        if n - popcount(used) < r - len(chosen):
            return False
        for s in sets:
            low = (s & -s).bit_length() - 1
            if low <= last_min or s & used:
                continue
            if all(boundary[s] & t for t in chosen):
                chosen.append(s)
                if grow(used | s, low):
                    return True
                chosen.pop()
        return False

    if grow(0, -1):
        return [members(s) for s in chosen]
    return None


def is_clique_model(g: MultiGraph, branch_sets: Sequence[Sequence[int]]) -> bool:
    adj = g.adjacency()
    masks = [sum(1 << v for v in b) for b in branch_sets]
    if any(a & b for a, b in combinations(masks, 2)):
        return False
    if not all(_connected(m, adj) for m in masks):
        return False
    for a, b in combinations(masks, 2):
        if not any(adj[v] & b for v in members(a)):
            return False
    return True


# -- edge cuts ---------------------------------------------------------------

@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[int, ...]
    side: tuple[int, ...]
    other: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return len(self.side) == 1 or len(self.other) == 1


def edge_cut(g: MultiGraph, side: int) -> list[int]:
    return [i for i, (u, v) in enumerate(g.edges) if (side >> u & 1) != (side >> v & 1)]


def _bipartitions(n: int):
    """Masks containing vertex 0 that leave the other side nonempty."""
    full = (1 << n) - 1
    for rest in range(1 << (n - 1)):
        side = rest << 1 | 1
        if side != full:
            yield side


def all_edge_cuts(g: MultiGraph) -> list[EdgeCut]:
    n = g.vertices
    if n > MAX_CUT_VERTICES:
        raise GraphError(f"cut enumeration is capped at {MAX_CUT_VERTICES} vertices")
    full = (1 << n) - 1
    out = []
    for side in _bipartitions(n):
        out.append(EdgeCut(tuple(edge_cut(g, side)), tuple(members(side)), tuple(members(full & ~side))))
    return out


def edge_connectivity(g: MultiGraph) -> float:
    if g.vertices < 2:
        return float("inf")
    return min(len(c.edges) for c in all_edge_cuts(g))


def is_3_edge_connected(g: MultiGraph) -> bool:
    return edge_connectivity(g) >= 3


def nontrivial_edge_cuts(g: MultiGraph, size: int) -> list[EdgeCut]:
    return [c for c in all_edge_cuts(g) if len(c.edges) == size and not c.trivial]


def minimal_edge_cuts(g: MultiGraph) -> set[frozenset[int]]:
    """Inclusion-minimal nonempty edge cuts, i.e. the bonds of ``g``."""
    cuts = {frozenset(c.edges) for c in all_edge_cuts(g) if c.edges}
    return {c for c in cuts if not any(d < c for d in cuts)}


def cut_cover_premise(g: MultiGraph, v: int) -> bool:
    """True iff ``g - v`` has an edge and each such edge lies in a non-trivial 3-edge cut of ``g``."""
    if not is_3_edge_connected(g):
        raise GraphError("cut_cover_premise needs a 3-edge-connected graph")
    away = [i for i, (a, b) in enumerate(g.edges) if v not in (a, b)]
    if not away:
        return False
    covered = set()
    for c in nontrivial_edge_cuts(g, 3):
        covered.update(c.edges)
    return all(i in covered for i in away)


# -- exhaustive enumeration ----------------------------------------------------

def graph_certificate(g: MultiGraph) -> tuple:
    edges = [1 << u | 1 << v for u, v in g.edges]
    enc, _ = canonical_labeling(g.vertices, edges)
    return (g.vertices, enc)


@lru_cache(maxsize=None)
def simple_graphs(n: int) -> tuple[MultiGraph, ...]:
    """All simple graphs on ``n`` vertices up to isomorphism.

    Graphs are grown one edge at a time from the empty graph and
    deduplicated by canonical certificate at each edge count.
    """
    pairs = list(combinations(range(n), 2))
    level = {graph_certificate(MultiGraph(n, ())): MultiGraph(n, ())}
    out = list(level.values())
    while level:
        nxt: dict = {}
        for g in level.values():
            present = set(g.edges)
            for pr in pairs:
                if pr in present:
                    continue
                h = MultiGraph(n, tuple(sorted(g.edges + (pr,))))
                cert = graph_certificate(h)
                if cert not in nxt:
                    nxt[cert] = h
        level = {k: nxt[k] for k in sorted(nxt)}
        out.extend(level.values())
    return tuple(out)


@dataclass
class SweepReport:
    nmax: int
    graphs_checked: int = 0
    per_n: dict[int, int] = field(default_factory=dict)
    witnesses: list[MultiGraph] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses


def sweep_graphs(nmax: int, predicate: Callable[[MultiGraph], bool], nmin: int = 1) -> SweepReport:
    """Apply ``predicate`` to every simple graph on ``nmin..nmax`` vertices.

    Graphs where the predicate holds are collected as witnesses, sorted by
    certificate.
    """
    report = SweepReport(nmax)
    hits = []
    for n in range(nmin, nmax + 1):
        graphs = simple_graphs(n)
        report.per_n[n] = len(graphs)
        report.graphs_checked += len(graphs)
        hits.extend(g for g in graphs if predicate(g))
    report.witnesses = sorted(hits, key=graph_certificate)
    return report


def cut_cover_counterexample(g: MultiGraph) -> bool:
    """Sweep predicate: 3-edge-connected and some vertex meets the cut-cover premise."""
    if g.vertices < 2 or not is_3_edge_connected(g):
        return False
    return any(cut_cover_premise(g, v) for v in range(g.vertices))


def dirac_counterexample(g: MultiGraph) -> bool:
    """Sweep predicate: minimum degree >= 3 yet no K_4 minor."""
    if g.vertices == 0 or min(g.degrees()) < 3:
        return False
    return has_clique_minor(g, 4) is None


def nevo_counterexample(g: MultiGraph, r: int = 5) -> bool:
    """Sweep predicate: every edge in >= r-2 triangles yet no K_r minor."""
    if not g.edges:
        return False
    if min(triangles_through_edges(g)) < r - 2:
        return False
    return has_clique_minor(g, r) is None
