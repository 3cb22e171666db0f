"""Named matroids with self-checking fact lists.

Ground-set orderings:

* ``F7``: column ``i`` is the binary expansion of ``i + 1``.
* ``MK n``: edges of K_n in lexicographic order of endpoint pairs.
* ``AG23``: points ``(x, y, 1)`` with x major, y minor.
* ``W r`` (whirl), ``TW r`` and ``Wheel r``: element ``2i`` is spoke i, ``2i + 1`` is rim edge i.
* ``TU 2,n``: columns (1, 0), (0, 1), (1, 1), (1, 2), ... over the smallest field that fits.
* ``S5612``: columns of ``[I_6 | A]`` for the extended ternary Golay code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .connectivity import is_3_connected
from .field import FieldMatrix
from .graphs import complete_bipartite, complete_graph, wheel_graph
from .matroid import (Matroid, MatroidError, delete, dual, girth, is_binary_fournier, is_simple,
                      mask_of, popcount, triangles)
from .minors import has_minor, has_restriction, isomorphic


class CatalogError(MatroidError):
    pass


def _identity_block(a: list[list[int]]) -> list[list[int]]:
    r = len(a)
    return [[int(i == j) for j in range(r)] + list(a[i]) for i in range(r)]


R10_BLOCK = [[1, 1, 0, 0, 1],
             [1, 1, 1, 0, 0],
             [0, 1, 1, 1, 0],
             [0, 0, 1, 1, 1],
             [1, 0, 0, 1, 1]]

GOLAY_BLOCK = [[0, 1, 1, 1, 1, 1],
               [1, 0, 1, 2, 2, 1],
               [1, 1, 0, 1, 2, 2],
               [1, 2, 1, 0, 1, 2],
               [1, 2, 2, 1, 0, 1],
               [1, 1, 2, 2, 1, 0]]

P7_COLUMNS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 2)]

J_BLOCK = [[1, 1, 0, 1],
           [2, 2, 0, 0],
           [2, 2, 1, 0],
           [2, 1, 2, 2]]


def fano() -> Matroid:
    """Identity block first, then 110, 101, 011, 111; {3, 4, 5} is a line."""
    cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    return Matroid.from_matrix(FieldMatrix.from_columns(cols, 2), name="F7")


def uniform(r: int, n: int) -> Matroid:
    return Matroid.uniform(r, n)


def complete_graphic(n: int) -> Matroid:
    if not 1 <= n <= 7:
        raise CatalogError("M(K_n) is provided for 1 <= n <= 7")
    return Matroid.from_graph(complete_graph(n), name=f"M(K{n})")


def ag23() -> Matroid:
    cols = [(x, y, 1) for x in range(3) for y in range(3)]
    return Matroid.from_matrix(FieldMatrix.from_columns(cols, 3), name="AG(2,3)")


def p7() -> Matroid:
    return Matroid.from_matrix(FieldMatrix.from_columns(P7_COLUMNS, 3), name="P7")


def r10() -> Matroid:
    return Matroid.from_matrix(FieldMatrix.from_rows(_identity_block(R10_BLOCK), 2), name="R10")


def j_matroid() -> Matroid:
    return Matroid.from_matrix(FieldMatrix.from_rows(_identity_block(J_BLOCK), 3), name="J")


def s5612() -> Matroid:
    return Matroid.from_matrix(FieldMatrix.from_rows(_identity_block(GOLAY_BLOCK), 3), name="S(5,6,12)")


def wheel(r: int) -> Matroid:
    if r < 2:
        raise CatalogError("wheels need at least 2 spokes")
    return Matroid.from_graph(wheel_graph(r), name=f"M(W{r})")


def whirl(r: int) -> Matroid:
    """The wheel's cycle matroid with its rim circuit-hyperplane relaxed."""
    if r < 2:
        raise CatalogError("whirls need r >= 2")
    base = wheel(r)
    rim = mask_of(2 * i + 1 for i in range(r))
    circ = [c for c in base.circuit_masks() if c != rim]
    circ += [rim | 1 << (2 * i) for i in range(r)]
    return Matroid.from_circuits(2 * r, circ, name=f"W^{r}")


def ternary_whirl(r: int) -> Matroid:
    """The whirl as a GF(3) matrix: spokes e_i, rims e_i - e_(i+1), last rim e_(r-1) + e_0."""
    if r < 2:
        raise CatalogError("whirls need r >= 2")
    cols = []
    for i in range(r):
        spoke = [0] * r
        spoke[i] = 1
        rim = [0] * r
        rim[i] = 1
        if i < r - 1:
            rim[i + 1] = 2
        else:
            rim[0] = 1
        cols += [spoke, rim]
    return Matroid.from_matrix(FieldMatrix.from_columns(cols, 3, rows=r), name=f"W^{r} (GF(3))")


def linear_line(r: int, n: int) -> Matroid:
    """U_{2,n} as a matrix over the least supported prime p with n <= p + 1."""
    if r != 2 or n < 2:
        raise CatalogError("linear uniform matroids are provided for rank 2 only")
    p = next((q for q in (2, 3, 5, 7) if n <= q + 1), None)
    if p is None:
        raise CatalogError("U2,n needs n <= 8 for a supported field")
    cols = [(1, 0), (0, 1)] + [(1, a) for a in range(1, n - 1)]
    return Matroid.from_matrix(FieldMatrix.from_columns(cols[:n], p), name=f"U2,{n} (GF({p}))")


_BUILDERS: dict[str, tuple[int, Callable[..., Matroid]]] = {
    "U": (2, uniform),
    "F7": (0, fano),
    "F7*": (0, lambda: _named(dual(fano()), "F7*")),
    "MK": (1, complete_graphic),
    "MK33": (0, lambda: Matroid.from_graph(complete_bipartite(3, 3), name="M(K3,3)")),
    "AG23": (0, ag23),
    "P7": (0, p7),
    "R10": (0, r10),
    "W": (1, whirl),
    "TW": (1, ternary_whirl),
    "TU": (2, linear_line),
    "Wheel": (1, wheel),
    "J": (0, j_matroid),
    "S5612": (0, s5612),
}


def _named(m: Matroid, name: str) -> Matroid:
    m.name = name
    return m


def names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def get(name: str, *params: int) -> Matroid:
    """Catalog matroid ``name`` with integer parameters, e.g. ``get("U", 2, 4)``."""
    if name not in _BUILDERS:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(_BUILDERS)}")
    arity, build = _BUILDERS[name]
    if len(params) != arity:
        raise CatalogError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if name == "U" and not (0 <= params[0] <= params[1] and params[1] >= 2):
        raise CatalogError("U needs 0 <= r <= n and n >= 2")
    return build(*params)


_SPEC = re.compile(r"^([A-Za-z]+[0-9]*\*?)\(?([0-9,\s]*)\)?$")


def parse_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Split names like ``U2,4``, ``W3``, ``MK5`` or ``F7*`` into (name, params)."""
    text = text.strip()
    if text in _BUILDERS:
        return text, ()
    for key in sorted(_BUILDERS, key=len, reverse=True):
        if text.startswith(key):
            rest = text[len(key):].strip("() ")
            try:
                params = tuple(int(x) for x in rest.split(",") if x.strip())
            except ValueError:
                continue
            if len(params) == _BUILDERS[key][0]:
                return key, params
    raise CatalogError(f"cannot parse catalog name {text!r}")


def get_by_name(text: str) -> Matroid:
    name, params = parse_name(text)
    return get(name, *params)


# -- expected facts -----------------------------------------------------------------

@dataclass(frozen=True)
class Fact:
    name: str
    check: Callable[[Matroid], bool]
    source: str = "derived"


@dataclass
class CatalogEntry:
    label: str
    name: str
    params: tuple[int, ...]
    recipe: str
    facts: list[Fact] = field(default_factory=list)

    def build(self) -> Matroid:
        return get(self.name, *self.params)


@dataclass(frozen=True)
class FactResult:
    entry: str
    fact: str
    passed: bool
    source: str


def _size_rank(n: int, r: int) -> Fact:
    return Fact(f"{n} elements, rank {r}", lambda m: m.n == n and m.rank() == r, "trivial")


def _each_in(k: int) -> Fact:
    return Fact(f"every element in exactly {k} triangles",
                lambda m: set(triangles(m).counts) == {k}, "cited")


def _no_minor(target: str, *params: int) -> Fact:
    return Fact(f"no {target}{''.join(map(str, params))} minor",
                lambda m: has_minor(m, get(target, *params)) is None, "cited")


def poor_elements(m: Matroid, at_most: int = 1) -> list[int]:
    """Elements lying in at most ``at_most`` triangles."""
    return [e for e, c in enumerate(triangles(m).counts) if c <= at_most]


def steiner_blocks_ok(m: Matroid) -> bool:
    """132 six-element circuits and every 5-subset inside exactly one of them."""
    six = [c for c in m.circuit_masks() if popcount(c) == 6]
    if len(six) != 132:
        return False
    hits: dict[int, int] = {}
    for c in six:
        for sub in combinations([e for e in range(m.n) if c >> e & 1], 5):
            key = mask_of(sub)
            hits[key] = hits.get(key, 0) + 1
    return len(hits) == 792 and set(hits.values()) == {1}


def entries() -> list[CatalogEntry]:
    out = [
        CatalogEntry("U2,4", "U", (2, 4), "all 3-subsets are circuits", [
            _size_rank(4, 2), _each_in(3),
            Fact("4 triangles", lambda m: len(triangles(m).triangles) == 4, "trivial"),
            Fact("not binary (Fournier)", lambda m: not is_binary_fournier(m)),
            Fact("self-dual", lambda m: isomorphic(m, dual(m)) is not None),
        ]),
        CatalogEntry("F7", "F7", (), "columns = nonzero vectors of GF(2)^3", [
            _size_rank(7, 3), _each_in(3),
            Fact("binary (Fournier)", is_binary_fournier),
            Fact("14 circuits: 7 triangles and 7 of size 4",
                 lambda m: sorted(popcount(c) for c in m.circuit_masks()) == [3] * 7 + [4] * 7),
        ]),
        CatalogEntry("F7*", "F7*", (), "dual of F7", [
            _size_rank(7, 4),
            Fact("max per-element triangle count 0", lambda m: triangles(m).max_count == 0),
            Fact("not isomorphic to F7", lambda m: isomorphic(m, get("F7")) is None),
        ]),
        CatalogEntry("MK33", "MK33", (), "cycle matroid of K3,3", [
            _size_rank(9, 5),
            Fact("triangle-free", lambda m: not triangles(m).triangles),
        ]),
        CatalogEntry("AG23", "AG23", (), "affine points (x, y, 1) over GF(3)", [
            _size_rank(9, 3), _each_in(4),
            Fact("no U2,4 restriction", lambda m: has_restriction(m, get("U", 2, 4)) is None, "cited"),
            _no_minor("MK", 4), _no_minor("F7"), _no_minor("MK", 5),
        ]),
        CatalogEntry("R10", "R10", (), "[I5 | circulant block] over GF(2)", [
            _size_rank(10, 5),
            Fact("triangle-free", lambda m: not triangles(m).triangles, "cited"),
            Fact("every single deletion is isomorphic to M(K3,3)",
                 lambda m: all(isomorphic(delete(m, 1 << e), get("MK33")) is not None
                               for e in range(m.n)), "cited"),
            Fact("girth 4", lambda m: girth(m) == 4),
            Fact("binary (Fournier)", is_binary_fournier),
        ]),
        CatalogEntry("P7", "P7", (), "seven points of PG(2,3)", [
            _size_rank(7, 3),
            Fact("simple", is_simple, "cited"),
            Fact("every element in at least 2 triangles",
                 lambda m: triangles(m).min_count >= 2, "cited"),
            _no_minor("MK", 4),
            Fact("3-connected", is_3_connected),
            Fact("not binary (Fournier)", lambda m: not is_binary_fournier(m)),
        ]),
        CatalogEntry("J", "J", (), "[I4 | A] over GF(3)", [
            _size_rank(8, 4),
            Fact("3-connected", is_3_connected),
            _no_minor("MK", 4),
            Fact("has a P7 minor", lambda m: has_minor(m, get("P7")) is not None, "cited"),
            Fact("not isomorphic to the whirl W^4", lambda m: isomorphic(m, get("W", 4)) is None),
        ]),
        CatalogEntry("S5612", "S5612", (), "[I6 | A] generating the extended ternary Golay code", [
            _size_rank(12, 6),
            Fact("132 six-element circuits, each 5-subset in exactly one", steiner_blocks_ok),
            Fact("girth 6", lambda m: girth(m) == 6),
            Fact("self-dual", lambda m: isomorphic(m, dual(m)) is not None),
            _no_minor("MK", 4),
        ]),
        CatalogEntry("W2", "W", (2,), "wheel with rim relaxed", [
            _size_rank(4, 2),
            Fact("isomorphic to U2,4", lambda m: isomorphic(m, get("U", 2, 4)) is not None, "cited"),
        ]),
    ]
    for n in (4, 5, 6):
        out.append(CatalogEntry(f"MK{n}", "MK", (n,), f"cycle matroid of K{n}", [
            _size_rank(n * (n - 1) // 2, n - 1), _each_in(n - 2),
        ]))
    for r in (3, 4, 5):
        out.append(CatalogEntry(f"W{r}", "W", (r,), "wheel with rim relaxed", [
            _size_rank(2 * r, r),
            Fact("at least 2 elements each in at most 1 triangle",
                 lambda m: len(poor_elements(m)) >= 2, "cited"),
            Fact("3-connected", is_3_connected),
            Fact("not binary (Fournier)", lambda m: not is_binary_fournier(m)),
        ]))
    for r in (2, 3, 4):
        out.append(CatalogEntry(f"TW{r}", "TW", (r,), "whirl as a GF(3) matrix", [
            Fact(f"isomorphic to W{r}", lambda m, r=r: isomorphic(m, get("W", r)) is not None),
        ]))
    out.append(CatalogEntry("TU2,4", "TU", (2, 4), "four points of PG(1,3)", [
        Fact("isomorphic to U2,4", lambda m: isomorphic(m, get("U", 2, 4)) is not None),
    ]))
    return out


def validate_catalog() -> list[FactResult]:
    results = []
    for entry in entries():
        m = entry.build()
        for fact in entry.facts:
            results.append(FactResult(entry.label, fact.name, bool(fact.check(m)), fact.source))
    return results
