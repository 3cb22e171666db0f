"""Isomorphism, canonical forms, and minor/restriction containment with witnesses.

Every witness returned here has already been re-checked by comparing
circuit families under the claimed bijection.
"""

from __future__ import annotations

import time
from math import comb
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .canon import canonical_labeling
from .connectivity import tutte_connectivity
from .matroid import (Matroid, MatroidError, contract, delete, dual, is_simple, mask_of, members,
                      minor, popcount, simplify)

MAX_SEARCH_ELEMENTS = 16
MAX_ENUM_ELEMENTS = 12


class SearchLimitError(MatroidError):
    """Input exceeds the size cap of an exhaustive search."""


class TimeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[i]`` is the element of the second matroid matched with ``i``."""

    mapping: tuple[int, ...]


@dataclass(frozen=True)
class MinorWitness:
    delete: int
    contract: int
    iso: IsoWitness

    def kept(self, n: int) -> list[int]:
        return members(((1 << n) - 1) & ~(self.delete | self.contract))


@dataclass(frozen=True)
class RestrictionWitness:
    subset: int
    iso: IsoWitness


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes

    def __str__(self):
        return self.data.decode()


# -- invariants ----------------------------------------------------------------

def element_signature(m: Matroid, e: int, circ: Sequence[int]) -> tuple[int, ...]:
    counts = [0] * (m.n + 2)
    for c in circ:
        if c >> e & 1:
            counts[popcount(c)] += 1
    return tuple(counts)


def _profile(m: Matroid):
    circ = m.circuit_masks()
    sigs = [element_signature(m, e, circ) for e in range(m.n)]
    sizes = sorted(popcount(c) for c in circ)
    return circ, sigs, (m.n, m.rank(), tuple(sizes), tuple(sorted(sigs)))


def maps_circuits(a: Matroid, b: Matroid, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` carries the circuits of ``a`` exactly onto those of ``b``."""
    if a.n != b.n or sorted(mapping) != list(range(b.n)):
        return False
    image = {mask_of(mapping[e] for e in members(c)) for c in a.circuit_masks()}
    return image == set(b.circuit_masks())


# -- backtracking matcher ------------------------------------------------------

def _match(target_circ: Sequence[int], order: Sequence[int], host_circ: Sequence[int], host_n: int,
           candidates: Sequence[Sequence[int]], deadline: float | None = None) -> list[int] | None:
    """Injective map of target elements (taken in ``order``) into the host.

    After each assignment the host circuits inside the image that contain
    the new element must equal, position for position, the target circuits
    completed at that step.  This makes the final map a restriction
    isomorphism.
    """
    k = len(order)
    pos = {t: i for i, t in enumerate(order)}
    need: list[set[int]] = [set() for _ in range(k)]
    for c in target_circ:
        pm = 0
        for t in members(c):
            pm |= 1 << pos[t]
        need[pm.bit_length() - 1].add(pm)
    by_elem = [[c for c in host_circ if c >> h & 1] for h in range(host_n)]
    image = [0] * k
    host_pos = [-1] * host_n
    counter = [0]

    def step(i: int, used: int) -> bool:
        if i == k:
            return True
        counter[0] += 1
        if deadline is not None and counter[0] & 1023 == 0 and time.monotonic() > deadline:
            raise TimeBudgetExceeded("minor search ran out of time")
        want = need[i]
        for h in candidates[i]:
            if used >> h & 1:
                continue
            img = used | 1 << h
            host_pos[h] = i
            got = set()
            ok = True
            for c in by_elem[h]:
                if c & ~img == 0:
                    pm = 0
                    for x in members(c):
                        pm |= 1 << host_pos[x]
                    if pm not in want:
                        ok = False
                        break
                    got.add(pm)
            if ok and len(got) == len(want):
                image[i] = h
                if step(i + 1, img):
                    return True
            host_pos[h] = -1
        return False

    if step(0, 0):
        return list(image)
    return None


def _closing_order(n: int, circ: Sequence[int]) -> list[int]:
    """Element order that completes circuits early, which prunes the matcher."""
    order: list[int] = []
    chosen = 0
    remaining = set(range(n))
    while remaining:
        def score(e):
            now = chosen | 1 << e
            closed = sum(1 for c in circ if c >> e & 1 and c & ~now == 0)
            touching = sum(popcount(c & chosen) for c in circ if c >> e & 1)
            return (closed, touching, -e)

        best = max(remaining, key=score)
        order.append(best)
        chosen |= 1 << best
        remaining.discard(best)
    return order


# -- isomorphism and canonical forms ----------------------------------------------

def isomorphic(m: Matroid, n: Matroid) -> IsoWitness | None:
    """Lexicographically least isomorphism from ``m`` to ``n``, or None."""
    if m.n != n.n:
        return None
    if m.n > MAX_SEARCH_ELEMENTS:
        raise SearchLimitError(f"isomorphism search is capped at {MAX_SEARCH_ELEMENTS} elements")
    mc, msig, minv = _profile(m)
    nc, nsig, ninv = _profile(n)
    if minv != ninv:
        return None
    order = list(range(m.n))
    cands = [[h for h in range(n.n) if nsig[h] == msig[t]] for t in order]
    found = _match(mc, order, nc, n.n, cands)
    if found is None:
        return None
    if not maps_circuits(m, n, found):
        raise AssertionError("isomorphism witness failed re-verification")
    return IsoWitness(tuple(found))


def canonical_labeling_of(m: Matroid) -> list[int]:
    if m.n > MAX_SEARCH_ELEMENTS:
        raise SearchLimitError(f"canonical forms are capped at {MAX_SEARCH_ELEMENTS} elements")
    _, order = canonical_labeling(m.n, m.circuit_masks())
    return order


def canonical_form(m: Matroid) -> CanonicalForm:
    """Byte string equal for two matroids exactly when they are isomorphic."""
    if m.n > MAX_SEARCH_ELEMENTS:
        raise SearchLimitError(f"canonical forms are capped at {MAX_SEARCH_ELEMENTS} elements")
    enc, _ = canonical_labeling(m.n, m.circuit_masks())
    body = ".".join(format(c, "x") for c in enc)
    return CanonicalForm(f"{m.n}:{m.rank()}:{body}".encode())


# -- restrictions and minors --------------------------------------------------------

def _restriction_search(host: Matroid, target: Matroid, deadline=None) -> list[int] | None:
    if target.n > host.n:
        return None
    tc = target.circuit_masks()
    hc = host.circuit_masks()
    order = _closing_order(target.n, tc)
    tsig = [element_signature(target, e, tc) for e in range(target.n)]
    hsig = [element_signature(host, h, hc) for h in range(host.n)]
    cands = []
    for t in order:
        need = tsig[t]
        cands.append([h for h in range(host.n) if all(a >= b for a, b in zip(hsig[h], need))])
    found = _match(tc, order, hc, host.n, cands, deadline)
    if found is None:
        return None
    mapping = [0] * target.n
    for i, t in enumerate(order):
        mapping[t] = found[i]
    return mapping


def has_restriction(m: Matroid, target: Matroid, deadline: float | None = None) -> RestrictionWitness | None:
    """A subset S with ``m|S`` isomorphic to ``target``.

    The witness isomorphism maps the elements of ``m|S`` (in increasing
    order) onto the elements of ``target``.
    """
    if m.n > MAX_SEARCH_ELEMENTS:
        raise SearchLimitError(f"restriction search is capped at {MAX_SEARCH_ELEMENTS} elements")
    placed = _restriction_search(m, target, deadline)
    if placed is None:
        return None
    subset = mask_of(placed)
    kept = members(subset)
    index = {h: i for i, h in enumerate(kept)}
    iso = [0] * target.n
    for t, h in enumerate(placed):
        iso[index[h]] = t
    witness = RestrictionWitness(subset, IsoWitness(tuple(iso)))
    if not verify_restriction(m, target, witness):
        raise AssertionError("restriction witness failed re-verification")
    return witness


def verify_restriction(m: Matroid, target: Matroid, w: RestrictionWitness) -> bool:
    return maps_circuits(delete(m, m.full & ~w.subset), target, w.iso.mapping)


def verify_minor(m: Matroid, target: Matroid, w: MinorWitness) -> bool:
    if w.delete & w.contract:
        return False
    return maps_circuits(minor(m, w.delete, w.contract), target, w.iso.mapping)


def _independent_sets(m: Matroid, k: int):
    for combo in combinations(range(m.n), k):
        c = mask_of(combo)
        if m.rank(c) == k:
            yield c


def _minor_search(m: Matroid, target: Matroid, deadline=None) -> MinorWitness | None:
    k = m.rank() - target.rank()
    use_si = is_simple(target)
    for c in _independent_sets(m, k):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceeded("minor search ran out of time")
        quotient = contract(m, c)
        rest = members(m.full & ~c)
        if use_si:
            smap = simplify(quotient)
            host, back = smap.matroid, [rest[i] for i in smap.kept]
        else:
            host, back = quotient, rest
        if host.n < target.n:
            continue
        placed = _restriction_search(host, target, deadline)
        if placed is None:
            continue
        keep = mask_of(back[h] for h in placed)
        kept = members(keep)
        index = {e: i for i, e in enumerate(kept)}
        iso = [0] * target.n
        for t, h in enumerate(placed):
            iso[index[back[h]]] = t
        return MinorWitness(m.full & ~(keep | c), c, IsoWitness(tuple(iso)))
    return None


def has_minor(m: Matroid, target: Matroid, deadline: float | None = None) -> MinorWitness | None:
    """A ``(delete, contract, iso)`` witness that ``target`` is a minor of ``m``.

    Every minor is ``m / C \\ D`` with C independent of size
    ``r(m) - r(target)``, so the search runs over such C in lexicographic
    order and looks for ``target`` as a restriction of the simplified
    contraction.  When the dual search has fewer contraction sets it is
    used instead and the witness is translated back.
    """
    if m.n > MAX_SEARCH_ELEMENTS:
        raise SearchLimitError(f"minor search is capped at {MAX_SEARCH_ELEMENTS} elements")
    if target.n > m.n or target.rank() > m.rank() or target.corank() > m.corank():
        return None
    k = m.rank() - target.rank()
    k_dual = m.corank() - target.corank()
    if _binom(m.n, k_dual) < _binom(m.n, k):
        w = _minor_search(dual(m), dual(target), deadline)
        if w is not None:
            w = MinorWitness(w.contract, w.delete, w.iso)
    else:
        w = _minor_search(m, target, deadline)
    if w is not None and not verify_minor(m, target, w):
        raise AssertionError("minor witness failed re-verification")
    return w


def _binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


# -- enumeration of minors --------------------------------------------------------

def minor_classes(m: Matroid, limit: int = MAX_ENUM_ELEMENTS) -> dict[CanonicalForm, Matroid]:
    """One representative per isomorphism class of minors of ``m`` (all sizes)."""
    if m.n > limit:
        raise SearchLimitError(f"minor enumeration is capped at {limit} elements")
    level = {canonical_form(m): m}
    found = dict(level)
    while level:
        nxt: dict[CanonicalForm, Matroid] = {}
        for cf in sorted(level):
            rep = level[cf]
            for e in range(rep.n):
                for child in (delete(rep, 1 << e), contract(rep, 1 << e)):
                    key = canonical_form(child)
                    if key not in found and key not in nxt:
                        nxt[key] = child
        found.update(nxt)
        level = nxt
    return found


def three_connected_minors(m: Matroid, keep: Callable[[Matroid], bool] | None = None
                           ) -> list[tuple[CanonicalForm, Matroid]]:
    """Pairwise non-isomorphic nonempty 3-connected minors, ordered by canonical form."""
    out = []
    for cf, rep in minor_classes(m).items():
        if rep.n == 0 or tutte_connectivity(rep) < 3:
            continue
        if keep is None or keep(rep):
            out.append((cf, rep))
    out.sort(key=lambda pair: pair[0])
    return out
