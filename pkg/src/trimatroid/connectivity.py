"""k-separations, Tutte connectivity, and 1-, 2-, 3-sums built from circuits."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .matroid import (Matroid, MatroidError, coloops, is_binary_fournier, mask_of, members,
                      minimal_sets, popcount, restrict)


def connectivity_value(m: Matroid, x: int) -> int:
    """``r(X) + r(E - X) - r(E)``."""
    return m.rank(x) + m.rank(m.full & ~x) - m.rank()


@dataclass(frozen=True)
class Separation:
    x: int
    y: int
    k: int
    exact: bool

    def parts(self) -> tuple[list[int], list[int]]:
        return members(self.x), members(self.y)


def is_k_separation(m: Matroid, x: int, k: int) -> bool:
    y = m.full & ~x
    return min(popcount(x), popcount(y)) >= k and connectivity_value(m, x) <= k - 1


def find_k_separation(m: Matroid, k: int) -> Separation | None:
    """The k-separation whose first side has the least bitmask, if any."""
    if k < 1:
        raise MatroidError("k must be at least 1")
    full = m.full
    for x in range(1, full):
        y = full & ~x
        if popcount(x) < k or popcount(y) < k:
            continue
        c = connectivity_value(m, x)
        if c <= k - 1:
            return Separation(x, y, k, c == k - 1)
    return None


def tutte_connectivity(m: Matroid) -> float:
    """Least j such that ``m`` has a j-separation; ``math.inf`` if none."""
    n = m.n
    best = math.inf
    full = m.full
    for rest in range(1 << max(n - 1, 0)):
        x = rest << 1 | 1
        if x == full or n < 2:
            continue
        small = min(popcount(x), n - popcount(x))
        k = connectivity_value(m, x) + 1
        if k <= small and k < best:
            best = k
            if best == 1:
                break
    return best


lambda_ = tutte_connectivity


def is_connected(m: Matroid) -> bool:
    return tutte_connectivity(m) >= 2


def is_3_connected(m: Matroid) -> bool:
    return tutte_connectivity(m) >= 3


# -- sums --------------------------------------------------------------------

class SumError(MatroidError):
    """A k-sum precondition does not hold."""


class SharedSetSizeError(SumError):
    pass


class OperandTooSmallError(SumError):
    pass


class BasepointLoopError(SumError):
    pass


class BasepointColoopError(SumError):
    pass


class NotBinaryError(SumError):
    pass


class SharedNotCircuitError(SumError):
    pass


class SharedContainsCocircuitError(SumError):
    pass


class NotExactTwoSeparationError(MatroidError):
    pass


@dataclass(frozen=True)
class SumSpec:
    """Operands are glued along the elements whose labels they share."""

    kind: int
    m1: Matroid
    m2: Matroid

    @property
    def shared(self) -> tuple[str, ...]:
        common = set(self.m1.labels) & set(self.m2.labels)
        return tuple(x for x in self.m1.labels if x in common)


def _shared_masks(m1: Matroid, m2: Matroid) -> tuple[int, int]:
    common = set(m1.labels) & set(m2.labels)
    return (mask_of(i for i, x in enumerate(m1.labels) if x in common),
            mask_of(i for i, x in enumerate(m2.labels) if x in common))


def check_sum(spec: SumSpec):
    """Raise the matching SumError if ``spec`` is not a valid k-sum."""
    kind, m1, m2 = spec.kind, spec.m1, spec.m2
    if kind not in (1, 2, 3):
        raise SumError(f"unsupported sum order {kind}")
    s1, s2 = _shared_masks(m1, m2)
    expected = {1: 0, 2: 1, 3: 3}[kind]
    if popcount(s1) != expected:
        raise SharedSetSizeError(f"{kind}-sum needs {expected} shared elements, found {popcount(s1)}")
    if m1.n == 0 or m2.n == 0:
        raise OperandTooSmallError("operands must have nonempty ground sets")
    if kind == 2:
        if m1.n < 3 or m2.n < 3:
            raise OperandTooSmallError("2-sum operands need at least 3 elements")
        for m, s in ((m1, s1), (m2, s2)):
            if m.rank(s) == 0:
                raise BasepointLoopError("basepoint is a loop of an operand")
            if coloops(m) & s:
                raise BasepointColoopError("basepoint is a coloop of an operand")
    if kind == 3:
        if m1.n < 7 or m2.n < 7:
            raise OperandTooSmallError("3-sum operands need at least 7 elements")
        for m, s in ((m1, s1), (m2, s2)):
            if not is_binary_fournier(m):
                raise NotBinaryError("3-sum operands must be binary")
            if s not in set(m.circuit_masks(3)):
                raise SharedNotCircuitError("shared set is not a circuit of an operand")
            if m.rank(m.full & ~s) < m.rank():
                raise SharedContainsCocircuitError("shared set contains a cocircuit of an operand")


def _ground_maps(m1: Matroid, m2: Matroid):
    s1, s2 = _shared_masks(m1, m2)
    labels = [x for i, x in enumerate(m1.labels) if not s1 >> i & 1]
    labels += [x for i, x in enumerate(m2.labels) if not s2 >> i & 1]
    pos = {x: i for i, x in enumerate(labels)}
    map1 = [pos.get(x) for x in m1.labels]
    map2 = [pos.get(x) for x in m2.labels]
    return labels, map1, map2, s1, s2


def _carry(mask: int, where: list) -> int:
    out = 0
    for e in members(mask):
        out |= 1 << where[e]
    return out


def sum_circuits(m1: Matroid, m2: Matroid) -> tuple[list[str], list[int]]:
    """Minimal members of C(M1\\S) + C(M2\\S) + {C1 ^ C2} inside E1 ^ E2.

    Only pairs that meet the shared set in the same elements can give a
    symmetric difference avoiding it; every other pair either leaves the
    ground set or contains a smaller member.
    """
    labels, map1, map2, s1, s2 = _ground_maps(m1, m2)
    c1 = m1.circuit_masks()
    c2 = m2.circuit_masks()
    cands = [_carry(c, map1) for c in c1 if not c & s1]
    cands += [_carry(c, map2) for c in c2 if not c & s2]
    by_trace: dict[frozenset, list[int]] = {}
    for c in c2:
        if c & s2:
            key = frozenset(m2.labels[e] for e in members(c & s2))
            by_trace.setdefault(key, []).append(_carry(c & ~s2, map2))
    for c in c1:
        if not c & s1:
            continue
        key = frozenset(m1.labels[e] for e in members(c & s1))
        left = _carry(c & ~s1, map1)
        for right in by_trace.get(key, ()):
            cands.append(left | right)
    return labels, minimal_sets(x for x in cands if x)


def build_sum(spec: SumSpec) -> Matroid:
    check_sum(spec)
    labels, circ = sum_circuits(spec.m1, spec.m2)
    try:
        return Matroid.from_circuits(len(labels), circ, labels, validate=True)
    except MatroidError as err:
        raise SumError(f"{spec.kind}-sum produced an invalid circuit family: {err}") from err


def k_sum(m1: Matroid, m2: Matroid, kind: int) -> Matroid:
    return build_sum(SumSpec(kind, m1, m2))


def one_sum(m1: Matroid, m2: Matroid) -> Matroid:
    return k_sum(m1, m2, 1)


def two_sum(m1: Matroid, m2: Matroid) -> Matroid:
    return k_sum(m1, m2, 2)


def three_sum(m1: Matroid, m2: Matroid) -> Matroid:
    return k_sum(m1, m2, 3)


def _fresh_label(taken, base="z") -> str:
    label = base
    while label in taken:
        label += "'"
    return label


def decompose_two_sum(m: Matroid, sep: Separation) -> tuple[Matroid, Matroid, str]:
    """Split ``m`` along an exact 2-separation into ``(M1, M2, basepoint)``.

    ``M1`` lives on X plus a new basepoint and ``M2`` on Y plus the same
    basepoint; the 2-sum of the two reproduces ``m``'s circuits exactly.
    """
    x, y = sep.x, sep.y
    if x & y or x | y != m.full or not is_k_separation(m, x, 2) or connectivity_value(m, x) != 1:
        raise NotExactTwoSeparationError("not an exact 2-separation of this matroid")
    z = _fresh_label(m.labels)
    parts = []
    for side in (x, y):
        kept = members(side)
        where = {e: i for i, e in enumerate(kept)}
        zbit = 1 << len(kept)
        cands = []
        for c in m.circuit_masks():
            inside = c & side
            if not inside:
                continue
            mapped = 0
            for e in members(inside):
                mapped |= 1 << where[e]
            cands.append(mapped if inside == c else mapped | zbit)
        labels = [m.labels[e] for e in kept] + [z]
        parts.append(Matroid.from_circuits(len(kept) + 1, minimal_sets(cands), labels))
    m1, m2 = parts
    rebuilt = two_sum(m1, m2)
    if not same_labelled_circuits(rebuilt, m):
        raise NotExactTwoSeparationError("separation does not split the matroid as a 2-sum")
    return m1, m2, z


def same_labelled_circuits(a: Matroid, b: Matroid) -> bool:
    """Circuit families agree when elements are matched by label."""
    if sorted(a.labels) != sorted(b.labels):
        return False
    where = {x: i for i, x in enumerate(b.labels)}
    move = [where[x] for x in a.labels]
    return {_carry(c, move) for c in a.circuit_masks()} == set(b.circuit_masks())


def direct_sum_parts(m: Matroid, sep: Separation) -> tuple[Matroid, Matroid]:
    """``(M|X, M|Y)`` for a 1-separation."""
    if connectivity_value(m, sep.x) != 0:
        raise MatroidError("not a 1-separation")
    return restrict(m, sep.x), restrict(m, sep.y)


__all__ = [
    "Separation", "SumSpec", "SumError", "build_sum", "k_sum", "one_sum", "two_sum", "three_sum",
    "decompose_two_sum", "find_k_separation", "tutte_connectivity", "lambda_", "is_connected",
    "is_3_connected", "connectivity_value", "same_labelled_circuits",
]
