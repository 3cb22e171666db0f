"""Exact arithmetic and row reduction over small prime fields.

GF(2) work is done on int bitsets; other primes use plain tuples of ints.
Everything here is value-semantic and never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

SUPPORTED_PRIMES = (2, 3, 5, 7)


class FieldError(ValueError):
    """Raised for invalid field operations or malformed matrices."""


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise FieldError(f"unsupported modulus {self.p}; expected one of {SUPPORTED_PRIMES}")

    def check(self, a: int) -> int:
        if not 0 <= a < self.p:
            raise FieldError(f"scalar {a} outside [0, {self.p})")
        return a

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise FieldError("inversion of zero")
        return pow(a, self.p - 2, self.p)

    def __str__(self):
        return f"GF({self.p})"


GF2 = PrimeField(2)
GF3 = PrimeField(3)


def ff_op(a: int, b: int | None, kind: str, f: PrimeField) -> int:
    """Apply one of ``add``, ``mul``, ``neg``, ``inv`` in the field ``f``."""
    f.check(a)
    if kind in ("add", "mul"):
        if b is None:
            raise FieldError(f"{kind} needs two operands")
        f.check(b)
        return f.add(a, b) if kind == "add" else f.mul(a, b)
    if kind == "neg":
        return f.neg(a)
    if kind == "inv":
        return f.inv(a)
    raise FieldError(f"unknown operation {kind!r}")


@dataclass(frozen=True)
class FieldMatrix:
    field: PrimeField
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise FieldError(f"expected {self.rows} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise FieldError(f"row {i} has {len(row)} entries, expected {self.cols}")
            for a in row:
                if not 0 <= a < self.field.p:
                    raise FieldError(f"entry {a} in row {i} outside [0, {self.field.p})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int = 2, cols: int | None = None) -> FieldMatrix:
        """Build a matrix, reducing entries mod ``p``."""
        rows = [tuple(int(a) % p for a in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(PrimeField(p), len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], p: int = 2, rows: int | None = None) -> FieldMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], p, cols=len(columns))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, cols: Iterable[int]) -> FieldMatrix:
        cols = list(cols)
        return FieldMatrix(self.field, self.rows,
                           len(cols), tuple(tuple(row[j] for j in cols) for row in self.entries))

    def __str__(self):
        return "\n".join(" ".join(str(a) for a in row) for row in self.entries)


def rref(m: FieldMatrix) -> tuple[int, tuple[int, ...], FieldMatrix]:
    """Reduced row echelon form with leftmost-nonzero pivoting.

    Returns ``(rank, pivot_columns, reduced)``.  Zero rows are kept at the
    bottom so the reduced matrix has the same shape as ``m``.
    """
    p = m.field.p
    work = [list(r) for r in m.entries]
    pivots = []
    top = 0
    for c in range(m.cols):
        if top == m.rows:
            break
        piv = next((i for i in range(top, m.rows) if work[i][c]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        inv = pow(work[top][c], p - 2, p)
        work[top] = [(a * inv) % p for a in work[top]]
        for i in range(m.rows):
            if i != top and work[i][c]:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[top])]
        pivots.append(c)
        top += 1
    reduced = FieldMatrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in work))
    return len(pivots), tuple(pivots), reduced


def column_rank(m: FieldMatrix, cols: Iterable[int]) -> int:
    cols = list(cols)
    for j in cols:
        if not 0 <= j < m.cols:
            raise FieldError(f"column index {j} out of range for {m.cols} columns")
    return vector_rank([m.column(j) for j in cols], m.field.p)


def pack_gf2(vec: Sequence[int]) -> int:
    out = 0
    for i, a in enumerate(vec):
        if a & 1:
            out |= 1 << i
    return out


def vector_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a list of equal-length vectors over GF(p)."""
    if p == 2:
        return gf2_rank([pack_gf2(v) for v in vectors])
    basis: dict[int, list[int]] = {}
    for v in vectors:
        reduce_against(list(v), basis, p)
    return len(basis)


def reduce_against(v: list[int], basis: dict[int, list[int]], p: int) -> int | None:
    """Reduce ``v`` by a pivot-indexed echelon basis; insert it if independent.

    Basis vectors are normalized to have a leading 1 at their pivot.  Returns
    the new pivot, or ``None`` when ``v`` was already in the span.
    """
    for i in range(len(v)):
        a = v[i]
        if not a:
            continue
        b = basis.get(i)
        if b is None:
            inv = pow(a, p - 2, p)
            basis[i] = [(x * inv) % p for x in v]
            return i
        v = [(x - a * y) % p for x, y in zip(v, b)]
    return None


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)
