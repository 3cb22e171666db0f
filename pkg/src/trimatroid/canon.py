"""Canonical labeling of small hypergraphs by individualization and refinement.

Matroids are handled through their circuit hypergraph and simple graphs
through their edge set, so both share this search.  Points are ``0..n-1`` and
hyperedges are int bitmasks.  The search keeps the lexicographically least
relabeled edge list over all leaves, and prunes with automorphisms found
along the way (orbits of the pointwise stabilizer of the current path, plus
the usual jump back to the divergence level when a leaf repeats the first
or the best one).
"""

from __future__ import annotations

from typing import Sequence


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def refine(cells: list[list[int]], edges: Sequence[int], incident: Sequence[Sequence[int]],
           n: int) -> list[list[int]]:
    """Split cells until every point's edge-profile is constant on its cell."""
    while True:
        cell_of = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        k = len(cells)
        profile = []
        for h in edges:
            counts = [0] * k
            for v in _members(h):
                counts[cell_of[v]] += 1
            profile.append(tuple(counts))
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                sig = tuple(sorted(profile[j] for j in incident[v]))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


class _Search:
    def __init__(self, n: int, edges: Sequence[int], colors: Sequence | None):
        self.n = n
        self.edges = list(edges)
        self.incident = [[j for j, h in enumerate(self.edges) if h >> v & 1] for v in range(n)]
        if colors is None:
            self.start = [list(range(n))] if n else []
        else:
            groups: dict = {}
            for v in range(n):
                groups.setdefault(colors[v], []).append(v)
            self.start = [groups[k] for k in sorted(groups)]
        self.first = None
        self.best = None
        self.automorphisms: list[tuple[int, ...]] = []

    def encode(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        for h in self.edges:
            m = 0
            for v in _members(h):
                m |= 1 << pos[v]
            out.append(m)
        out.sort()
        return tuple(out)

    def _record(self, a: list[int], b: list[int]):
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        perm = tuple(perm)
        if perm != tuple(range(self.n)):
            self.automorphisms.append(perm)

    def _orbit_rep(self, path: list[int]):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.automorphisms:
            if all(g[v] == v for v in path):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        d = 0
        for x, y in zip(a, b):
            if x != y:
                break
            d += 1
        return d

    def run(self, cells: list[list[int]], path: list[int]):
        cells = refine(cells, self.edges, self.incident, self.n)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            enc = self.encode(order)
            if self.first is None:
                self.first = self.best = (enc, order, list(path))
                return None
            if enc == self.first[0]:
                self._record(self.first[1], order)
                return self._common(path, self.first[2])
            if enc < self.best[0]:
                self.best = (enc, order, list(path))
                return None
            if enc == self.best[0]:
                self._record(self.best[1], order)
                return self._common(path, self.best[2])
            return None
        depth = len(path)
        tried: list[int] = []
        for x in sorted(cells[target]):
            if tried:
                find = self._orbit_rep(path)
                if any(find(x) == find(y) for y in tried):
                    continue
            tried.append(x)
            rest = [v for v in cells[target] if v != x]
            child = cells[:target] + [[x], rest] + cells[target + 1:]
            back = self.run(child, path + [x])
            if back is not None and back < depth:
                return back
        return None


def canonical_labeling(n: int, edges: Sequence[int], colors: Sequence | None = None):
    """Return ``(encoding, order)`` for the hypergraph on ``n`` points.

    ``order[i]`` is the point placed at canonical position ``i``; the
    encoding is the sorted tuple of relabeled edge masks.  Two hypergraphs
    with equal ``colors`` multisets get equal encodings iff they are
    isomorphic by a color-preserving bijection.
    """
    s = _Search(n, edges, colors)
    if n == 0:
        return tuple(sorted(edges)), []
    s.run([list(c) for c in s.start], [])
    enc, order, _ = s.best
    return enc, order


def automorphism_generators(n: int, edges: Sequence[int]) -> list[tuple[int, ...]]:
    """Automorphisms met during the canonical search (they generate a subgroup)."""
    s = _Search(n, edges, None)
    if n:
        s.run([list(c) for c in s.start], [])
    return s.automorphisms
