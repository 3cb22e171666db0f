"""Matroids on small ground sets with a uniform rank oracle.

Elements are the integers ``0..n-1`` and subsets are int bitmasks.  Four
backends are supported: a matrix over a prime field, the cycle matroid of a
multigraph, the bond (cocycle) matroid of a multigraph, and an explicit
circuit family.  Minor operations keep the surviving elements in increasing
order and carry their labels along, so a minor's labels always name the
elements of the matroid it came from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .field import FieldMatrix, gf2_rank, pack_gf2, reduce_against, rref

MAX_ELEMENTS = 24


class MatroidError(ValueError):
    """Invalid matroid input (bad circuits, out-of-range subsets, size cap)."""


# -- subset helpers ---------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(members(mask), k):
        yield mask_of(combo)


# -- circuit families -------------------------------------------------------

@dataclass(frozen=True)
class CircuitFamily:
    """Antichain of element subsets, sorted by (size, mask)."""

    n: int
    masks: tuple[int, ...]

    @classmethod
    def of(cls, n: int, masks: Iterable[int]) -> CircuitFamily:
        return cls(n, tuple(sorted(set(masks), key=lambda c: (popcount(c), c))))

    def __iter__(self):
        return iter(self.masks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, mask):
        return mask in set(self.masks)

    def of_size(self, k: int) -> list[int]:
        return [c for c in self.masks if popcount(c) == k]

    def containing(self, e: int) -> list[int]:
        return [c for c in self.masks if c >> e & 1]

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(members(c)) for c in self.masks]


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of nonempty masks."""
    kept: list[int] = []
    for c in sorted(set(masks), key=lambda c: (popcount(c), c)):
        if c and not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


def enumerate_circuits(n: int, rank: Callable[[int], int], max_size: int | None = None) -> list[int]:
    """Minimal dependent sets by increasing size.

    Candidates of size ``k+1`` are built only from independent ``k``-sets all
    of whose ``k``-subsets are independent, so each dependent candidate is a
    circuit.
    """
    found = []
    level = {0}
    k = 0
    while level and (max_size is None or k < max_size):
        nxt = set()
        for t in sorted(level):
            for x in range(t.bit_length(), n):
                s = t | 1 << x
                if any(s ^ 1 << y not in level for y in members(t)):
                    continue
                if rank(s) == k + 1:
                    nxt.add(s)
                else:
                    found.append(s)
        level = nxt
        k += 1
    return found


def check_circuit_axioms(n: int, masks: Sequence[int]) -> str | None:
    """Return a description of the first circuit-axiom violation, or None."""
    full = (1 << n) - 1
    seen = set()
    for c in masks:
        if c == 0:
            return "empty circuit"
        if c & ~full:
            return f"circuit {members(c)} uses elements outside the ground set"
        if c in seen:
            return f"duplicate circuit {members(c)}"
        seen.add(c)
    ordered = sorted(masks, key=lambda c: (popcount(c), c))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & ~b == 0:
                return f"circuit {members(a)} is contained in {members(b)}"
    memo: dict[int, bool] = {}

    def has_circuit(u):
        if u not in memo:
            memo[u] = any(c & ~u == 0 for c in ordered)
        return memo[u]

    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            common = a & b
            union = a | b
            for e in members(common):
                if not has_circuit(union & ~(1 << e)):
                    return f"elimination fails for {members(a)}, {members(b)} at {e}"
    return None


# -- the matroid ------------------------------------------------------------

class Matroid:
    """A matroid on elements ``0..n-1`` backed by one of four representations.

    ``kind`` is one of ``linear`` (payload: FieldMatrix), ``graphic`` and
    ``bond`` (payload: a multigraph with ``vertices`` and ``edges``), or
    ``circuits`` (payload: tuple of circuit masks).
    """

    KINDS = ("linear", "graphic", "bond", "circuits")

    def __init__(self, n: int, kind: str, payload, labels: Sequence[str] | None = None,
                 name: str = ""):
        if kind not in self.KINDS:
            raise MatroidError(f"unknown backend {kind!r}")
        if n < 0 or n > MAX_ELEMENTS:
            raise MatroidError(f"ground set of size {n} exceeds the cap of {MAX_ELEMENTS}")
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise MatroidError(f"{len(labels)} labels for {n} elements")
        if len(set(labels)) != n:
            raise MatroidError("element labels must be distinct")
        self.n = n
        self.kind = kind
        self.payload = payload
        self.labels = labels
        self.name = name
        self._memo: dict[int, int] = {}
        self._circuits: list[int] | None = None
        self._setup()

    # construction -----------------------------------------------------

    @classmethod
    def from_matrix(cls, matrix: FieldMatrix, labels=None, name="") -> Matroid:
        return cls(matrix.cols, "linear", matrix, labels, name)

    @classmethod
    def from_graph(cls, g, labels=None, name="") -> Matroid:
        return cls(len(g.edges), "graphic", g, labels, name)

    @classmethod
    def from_bond(cls, g, labels=None, name="") -> Matroid:
        return cls(len(g.edges), "bond", g, labels, name)

    @classmethod
    def from_circuits(cls, n: int, circuits: Iterable[Iterable[int] | int], labels=None, name="",
                      validate: bool = True) -> Matroid:
        masks = [c if isinstance(c, int) else mask_of(c) for c in circuits]
        if validate:
            problem = check_circuit_axioms(n, masks)
            if problem:
                raise MatroidError(f"not a circuit family: {problem}")
        masks = sorted(set(masks), key=lambda c: (popcount(c), c))
        return cls(n, "circuits", tuple(masks), labels, name)

    @classmethod
    def uniform(cls, r: int, n: int, name="") -> Matroid:
        if not 0 <= r <= n:
            raise MatroidError(f"U_{{{r},{n}}} needs 0 <= r <= n")
        circ = [mask_of(c) for c in combinations(range(n), r + 1)]
        return cls(n, "circuits", tuple(circ), None, name or f"U{r},{n}")

    def _setup(self):
        if self.kind == "linear":
            m = self.payload
            self._p = m.field.p
            cols = m.columns()
            self._cols = [pack_gf2(c) for c in cols] if self._p == 2 else [list(c) for c in cols]
        elif self.kind in ("graphic", "bond"):
            for u, v in self.payload.edges:
                if not (0 <= u < self.payload.vertices and 0 <= v < self.payload.vertices):
                    raise MatroidError(f"edge ({u},{v}) has an endpoint out of range")
        else:
            self._by_elem = [[c for c in self.payload if c >> e & 1] for e in range(self.n)]

    # rank oracle -------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def rank(self, s: int | Iterable[int] | None = None) -> int:
        if s is None:
            s = self.full
        elif not isinstance(s, int):
            s = mask_of(s)
        if s & ~self.full:
            raise MatroidError(f"subset {members(s)} is not inside a ground set of size {self.n}")
        r = self._memo.get(s)
        if r is None:
            r = self._rank(s)
            self._memo[s] = r
        return r

    def _rank(self, s: int) -> int:
        kind = self.kind
        if kind == "linear":
            if self._p == 2:
                return gf2_rank(self._cols[e] for e in members(s))
            basis: dict[int, list[int]] = {}
            for e in members(s):
                reduce_against(self._cols[e], basis, self._p)
            return len(basis)
        if kind == "graphic":
            return _forest_size(self.payload, s)
        if kind == "bond":
            full = self.full
            return popcount(s) - _forest_size(self.payload, full) + _forest_size(self.payload, full & ~s)
        indep = 0
        for e in members(s):
            cand = indep | 1 << e
            if not any(c & ~cand == 0 for c in self._by_elem[e]):
                indep = cand
        return popcount(indep)

    def is_independent(self, s) -> bool:
        if not isinstance(s, int):
            s = mask_of(s)
        return self.rank(s) == popcount(s)

    def closure(self, s: int) -> int:
        r = self.rank(s)
        out = s
        for e in range(self.n):
            if not s >> e & 1 and self.rank(s | 1 << e) == r:
                out |= 1 << e
        return out

    def corank(self) -> int:
        return self.n - self.rank()

    # circuits ----------------------------------------------------------

    def circuit_masks(self, max_size: int | None = None) -> list[int]:
        if self.kind == "circuits":
            circ = list(self.payload)
        else:
            if self._circuits is None:
                if max_size is not None and max_size <= 3:
                    return sorted(enumerate_circuits(self.n, self.rank, max_size),
                                  key=lambda c: (popcount(c), c))
                self._circuits = sorted(enumerate_circuits(self.n, self.rank),
                                        key=lambda c: (popcount(c), c))
            circ = self._circuits
        if max_size is not None:
            circ = [c for c in circ if popcount(c) <= max_size]
        return circ

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Matroid{tag} n={self.n} rank={self.rank()} {self.kind}>"


def _forest_size(g, s: int) -> int:
    parent = list(range(g.vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    size = 0
    for e in members(s):
        u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            size += 1
    return size


# -- operations -------------------------------------------------------------

def _as_mask(s) -> int:
    return s if isinstance(s, int) else mask_of(s)


def rank(m: Matroid, s=None) -> int:
    return m.rank(s)


def is_independent(m: Matroid, s) -> bool:
    return m.is_independent(s)


def circuits(m: Matroid, max_size: int | None = None) -> CircuitFamily:
    return CircuitFamily(m.n, tuple(m.circuit_masks(max_size)))


def cocircuits(m: Matroid) -> CircuitFamily:
    return circuits(dual(m))


@dataclass(frozen=True)
class TriangleProfile:
    triangles: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def min_count(self) -> int:
        return min(self.counts, default=0)

    @property
    def max_count(self) -> int:
        return max(self.counts, default=0)

    def poor_elements(self, below: int) -> list[int]:
        """Elements lying in fewer than ``below`` triangles."""
        return [e for e, c in enumerate(self.counts) if c < below]


def triangles(m: Matroid) -> TriangleProfile:
    tri = [c for c in m.circuit_masks(3) if popcount(c) == 3]
    counts = [0] * m.n
    for t in tri:
        for e in members(t):
            counts[e] += 1
    return TriangleProfile(tuple(tri), tuple(counts))


def girth(m: Matroid) -> float:
    circ = m.circuit_masks()
    return min((popcount(c) for c in circ), default=math.inf)


def is_simple(m: Matroid) -> bool:
    return not m.circuit_masks(2)


def loops(m: Matroid) -> int:
    return mask_of(e for e in range(m.n) if m.rank(1 << e) == 0)


def coloops(m: Matroid) -> int:
    r = m.rank()
    return mask_of(e for e in range(m.n) if m.rank(m.full & ~(1 << e)) < r)


def _keep(m: Matroid, keep: int) -> tuple[list[int], list[str]]:
    kept = members(keep)
    return kept, [m.labels[e] for e in kept]


def _compress(mask: int, kept: list[int]) -> int:
    out = 0
    for i, e in enumerate(kept):
        if mask >> e & 1:
            out |= 1 << i
    return out


def delete(m: Matroid, s) -> Matroid:
    s = _as_mask(s) & m.full
    if not s:
        return m
    kept, labels = _keep(m, m.full & ~s)
    if m.kind == "linear":
        return Matroid.from_matrix(m.payload.select_columns(kept), labels)
    if m.kind == "graphic":
        return Matroid.from_graph(m.payload.subgraph_edges(kept), labels)
    if m.kind == "bond":
        return Matroid.from_bond(m.payload.contract_edges(s, kept), labels)
    circ = [_compress(c, kept) for c in m.payload if c & s == 0]
    return Matroid.from_circuits(len(kept), circ, labels, validate=False)


def contract(m: Matroid, s) -> Matroid:
    s = _as_mask(s) & m.full
    if not s:
        return m
    kept, labels = _keep(m, m.full & ~s)
    if m.kind == "linear":
        return Matroid.from_matrix(_contract_matrix(m.payload, members(s), kept), labels)
    if m.kind == "graphic":
        return Matroid.from_graph(m.payload.contract_edges(s, kept), labels)
    if m.kind == "bond":
        return Matroid.from_bond(m.payload.subgraph_edges(kept), labels)
    circ = minimal_sets(_compress(c & ~s, kept) for c in m.payload)
    return Matroid.from_circuits(len(kept), circ, labels, validate=False)


def _contract_matrix(mat: FieldMatrix, contracted: list[int], kept: list[int]) -> FieldMatrix:
    order = contracted + kept
    r, pivots, red = rref(mat.select_columns(order))
    k = sum(1 for c in pivots if c < len(contracted))
    rows = [row[len(contracted):] for row in red.entries[k:r]]
    return FieldMatrix(mat.field, len(rows), len(kept), tuple(rows))


def restrict(m: Matroid, s) -> Matroid:
    return delete(m, m.full & ~_as_mask(s))


def minor(m: Matroid, delete_set=0, contract_set=0) -> Matroid:
    """``m / contract_set \\ delete_set`` with both sets in ``m``'s indices."""
    d, c = _as_mask(delete_set), _as_mask(contract_set)
    if d & c:
        raise MatroidError("delete and contract sets must be disjoint")
    kept = members(m.full & ~c)
    return delete(contract(m, c), _compress(d, kept))


def dual(m: Matroid) -> Matroid:
    if m.kind == "graphic":
        return Matroid.from_bond(m.payload, m.labels)
    if m.kind == "bond":
        return Matroid.from_graph(m.payload, m.labels)
    if m.kind == "linear":
        return Matroid.from_matrix(_dual_matrix(m.payload), m.labels)
    full = m.full
    r_full = m.rank()

    def corank(s):
        return popcount(s) - r_full + m.rank(full & ~s)

    circ = enumerate_circuits(m.n, corank)
    return Matroid.from_circuits(m.n, circ, m.labels, validate=False)


def _dual_matrix(mat: FieldMatrix) -> FieldMatrix:
    p = mat.field.p
    r, pivots, red = rref(mat)
    free = [j for j in range(mat.cols) if j not in pivots]
    rows = []
    for j, nj in enumerate(free):
        row = [0] * mat.cols
        row[nj] = 1
        for i, bi in enumerate(pivots):
            row[bi] = (-red.entries[i][nj]) % p
        rows.append(tuple(row))
    return FieldMatrix(mat.field, len(rows), mat.cols, tuple(rows))


def relabel(m: Matroid, perm: Sequence[int]) -> Matroid:
    """Matroid on the same labels in which old element ``e`` becomes ``perm[e]``."""
    n = m.n
    if sorted(perm) != list(range(n)):
        raise MatroidError("relabeling must be a permutation")
    inv = [0] * n
    for e, t in enumerate(perm):
        inv[t] = e
    labels = [m.labels[inv[t]] for t in range(n)]
    if m.kind == "linear":
        return Matroid.from_matrix(m.payload.select_columns(inv), labels)
    if m.kind in ("graphic", "bond"):
        g = m.payload.with_edges([m.payload.edges[inv[t]] for t in range(n)])
        return Matroid(n, m.kind, g, labels)
    circ = [mask_of(perm[e] for e in members(c)) for c in m.payload]
    return Matroid.from_circuits(n, circ, labels, validate=False)


def with_labels(m: Matroid, labels: Sequence[str], name: str | None = None) -> Matroid:
    """Same matroid, new element labels."""
    return Matroid(m.n, m.kind, m.payload, labels, m.name if name is None else name)


def as_circuit_matroid(m: Matroid) -> Matroid:
    if m.kind == "circuits":
        return m
    return Matroid.from_circuits(m.n, m.circuit_masks(), m.labels, m.name, validate=False)


def same_circuits(a: Matroid, b: Matroid) -> bool:
    return a.n == b.n and set(a.circuit_masks()) == set(b.circuit_masks())


@dataclass(frozen=True)
class SimplificationMap:
    matroid: Matroid
    representative: dict[int, int]
    loops: int
    kept: tuple[int, ...] = field(default=())


def simplify(m: Matroid) -> SimplificationMap:
    """Delete loops and keep the least element of each parallel class."""
    lp = loops(m)
    rep: dict[int, int] = {}
    for e in range(m.n):
        if lp >> e & 1:
            continue
        for f in range(e):
            if f in rep and rep[f] == f and m.rank(1 << e | 1 << f) == 1:
                rep[e] = f
                break
        else:
            rep[e] = e
    kept = tuple(e for e in range(m.n) if rep.get(e) == e)
    dropped = m.full & ~mask_of(kept)
    return SimplificationMap(delete(m, dropped), rep, lp, kept)


def fournier_violation(m: Matroid) -> tuple[int, int, tuple[int, int]] | None:
    """First ``(C1, C2, (p, q))`` violating Fournier's binarity condition.

    The condition: for distinct circuits C1, C2 and any two elements p, q
    common to both, ``(C1 | C2) - {p, q}`` contains a circuit.
    """
    circ = sorted(m.circuit_masks())
    for i, a in enumerate(circ):
        for b in circ[i + 1:]:
            common = a & b
            if popcount(common) < 2:
                continue
            union = a | b
            for p, q in combinations(members(common), 2):
                u = union & ~(1 << p | 1 << q)
                if m.is_independent(u):
                    return a, b, (p, q)
    return None


def is_binary_fournier(m: Matroid) -> bool:
    return fournier_violation(m) is None
