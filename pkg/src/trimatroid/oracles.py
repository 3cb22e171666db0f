"""Slow, independent reference computations.

Nothing here uses the circuit matcher, the minor search, or the minor
constructors; the checks only call the rank oracle of the host matroid.
They exist to cross-check the fast paths.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .field import FieldMatrix, vector_rank
from .matroid import Matroid, mask_of, members, popcount


def naive_circuits(m: Matroid) -> list[int]:
    """Minimal dependent sets found by testing every subset."""
    out = []
    for s in range(1 << m.n):
        k = popcount(s)
        if m.rank(s) == k:
            continue
        if all(m.rank(s & ~(1 << e)) == k - 1 for e in members(s)):
            out.append(s)
    return sorted(out, key=lambda c: (popcount(c), c))


def _minor_rank(host: Matroid, contract: int, kept: list[int]):
    base = host.rank(contract)

    def r(local: int) -> int:
        s = contract
        for i, e in enumerate(kept):
            if local >> i & 1:
                s |= 1 << e
        return host.rank(s) - base

    return r


def rank_check_minor(host: Matroid, target: Matroid, delete: int, contract: int,
                     iso: tuple[int, ...] | list[int]) -> bool:
    """Check ``host / contract \\ delete`` against ``target`` on every subset.

    Uses r(X) = r_host(X + C) - r_host(C) directly, so it does not depend on
    how minors are built elsewhere.  ``iso[i]`` is the target element matched
    with the i-th surviving element.
    """
    if delete & contract or (delete | contract) >> host.n:
        return False
    kept = members(((1 << host.n) - 1) & ~(delete | contract))
    if len(kept) != target.n or sorted(iso) != list(range(target.n)):
        return False
    r = _minor_rank(host, contract, kept)
    for local in range(1 << len(kept)):
        image = 0
        for i in range(len(kept)):
            if local >> i & 1:
                image |= 1 << iso[i]
        if r(local) != target.rank(image):
            return False
    return True


def rank_check_restriction(host: Matroid, target: Matroid, subset: int, iso) -> bool:
    return rank_check_minor(host, target, ((1 << host.n) - 1) & ~subset, 0, iso)


def brute_force_isomorphism(a: Matroid, b: Matroid) -> tuple[int, ...] | None:
    """Try every bijection; practical up to about 8 elements."""
    if a.n != b.n or a.rank() != b.rank():
        return None
    for perm in permutations(range(a.n)):
        if all(a.rank(s) == b.rank(mask_of(perm[e] for e in members(s))) for s in range(1 << a.n)):
            return perm
    return None


def brute_force_minors(host: Matroid, target: Matroid):
    """Yield every (delete, contract, iso) with host / C \\ D isomorphic to target.

    Scans all disjoint pairs (D, C) with the right number of survivors.
    """
    for kept in combinations(range(host.n), target.n):
        keep = mask_of(kept)
        rest = members(((1 << host.n) - 1) & ~keep)
        for bits in product((0, 1), repeat=len(rest)):
            contract = mask_of(e for e, b in zip(rest, bits) if b)
            delete = mask_of(e for e, b in zip(rest, bits) if not b)
            r = _minor_rank(host, contract, list(kept))
            if r((1 << len(kept)) - 1) != target.rank():
                continue
            for perm in permutations(range(target.n)):
                if all(r(s) == target.rank(mask_of(perm[i] for i in members(s)))
                       for s in range(1 << len(kept))):
                    yield delete, contract, perm
                    break


def representation_search(m: Matroid, p: int) -> FieldMatrix | None:
    """Search for a GF(p) matrix whose column matroid is ``m``.

    Columns of a fixed basis B are pinned to unit vectors, which loses no
    generality.  A non-basis column must then be supported exactly on its
    fundamental circuit, and its first nonzero entry may be scaled to 1, so
    only the remaining entries are enumerated.  Every partial assignment is
    checked against all ranks of subsets of assigned columns.
    """
    n, r = m.n, m.rank()
    basis = []
    for e in range(n):
        if m.rank(mask_of(basis + [e])) > len(basis):
            basis.append(e)
    bmask = mask_of(basis)
    cols: dict[int, tuple[int, ...]] = {}
    for i, e in enumerate(basis):
        cols[e] = tuple(int(j == i) for j in range(r))
    others = [e for e in range(n) if not bmask >> e & 1]
    options = {}
    for e in others:
        if m.rank(1 << e) == 0:
            options[e] = [tuple([0] * r)]
            continue
        support = [i for i, b in enumerate(basis) if m.rank((bmask & ~(1 << b)) | 1 << e) == r]
        choices = []
        for tail in product(range(1, p), repeat=max(len(support) - 1, 0)):
            v = [0] * r
            for i, a in zip(support, (1,) + tail):
                v[i] = a
            choices.append(tuple(v))
        options[e] = choices

    order = basis + others

    def consistent(upto: int) -> bool:
        new = order[upto]
        placed = order[:upto]
        for k in range(len(placed) + 1):
            if k + 1 > r + 1:
                break
            for combo in combinations(placed, k):
                s = mask_of(combo) | 1 << new
                if vector_rank([cols[x] for x in members(s)], p) != m.rank(s):
                    return False
        return True

    def step(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        if e in cols and i < len(basis):
            return consistent(i) and step(i + 1)
        for v in options[e]:
            cols[e] = v
            if consistent(i) and step(i + 1):
                return True
        cols.pop(e, None)
        return False

    if not step(0):
        return None
    return FieldMatrix.from_columns([cols[e] for e in range(n)], p, rows=r)


def minimal_elements_sum(m1: Matroid, m2: Matroid) -> set[frozenset[str]]:
    """Circuits of the sum as labelled sets, straight from the definition.

    Forms C(M1 \\ S), C(M2 \\ S) and every symmetric difference C1 ^ C2, keeps
    the nonempty members inside E1 ^ E2, and returns the inclusion-minimal ones.
    """
    shared = set(m1.labels) & set(m2.labels)
    c1 = [frozenset(m1.labels[e] for e in members(c)) for c in naive_circuits(m1)]
    c2 = [frozenset(m2.labels[e] for e in members(c)) for c in naive_circuits(m2)]
    cands = {c for c in c1 + c2 if not c & shared}
    cands |= {a ^ b for a in c1 for b in c2}
    cands = {c for c in cands if c and not c & shared}
    return {c for c in cands if not any(d < c for d in cands)}
