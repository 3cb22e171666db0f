from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimatroid.field import (FieldError, FieldMatrix, PrimeField, column_rank, ff_op, rref,
                              vector_rank)

FANO = FieldMatrix.from_columns(
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 2)


@pytest.mark.parametrize("a,b,kind,p,want", [
    (2, 2, "add", 3, 1),
    (2, None, "inv", 3, 2),
    (1, 1, "add", 2, 0),
    (3, 4, "mul", 5, 2),
    (1, None, "neg", 7, 6),
])
def test_ff_op_examples(a, b, kind, p, want):
    assert ff_op(a, b, kind, PrimeField(p)) == want


def test_inverse_of_zero_is_an_error():
    with pytest.raises(FieldError):
        ff_op(0, None, "inv", PrimeField(3))


def test_out_of_range_scalar_and_modulus():
    with pytest.raises(FieldError):
        ff_op(3, 1, "add", PrimeField(3))
    with pytest.raises(FieldError):
        PrimeField(4)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_inverses_are_inverses(p):
    f = PrimeField(p)
    for a in range(1, p):
        assert f.mul(a, f.inv(a)) == 1


def test_rref_identity_zero_and_fano():
    ident = FieldMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2)
    r, pivots, _ = rref(ident)
    assert (r, pivots) == (3, (0, 1, 2))
    r, pivots, _ = rref(FieldMatrix.from_rows([[0, 0], [0, 0]], 3))
    assert (r, pivots) == (0, ())
    assert rref(FANO)[0] == 3


def test_column_rank_examples():
    assert column_rank(FANO, [3, 4, 5]) == 2
    assert column_rank(FANO, []) == 0
    assert column_rank(FANO, range(7)) == 3
    with pytest.raises(FieldError):
        column_rank(FANO, [7])


def test_gf3_rank_differs_from_gf2():
    # 110, 101, 011 are dependent in characteristic 2 only
    cols = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    assert vector_rank(cols, 2) == 2
    assert vector_rank(cols, 3) == 3


matrices = st.integers(0, 2 ** 31).map(lambda s: _random_matrix(random.Random(s)))


def _random_matrix(rng):
    p = rng.choice((2, 3, 5, 7))
    rows, cols = rng.randint(0, 4), rng.randint(1, 7)
    return FieldMatrix.from_rows([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                                 p, cols=cols)


@settings(max_examples=150, deadline=None)
@given(matrices, st.integers(0, 2 ** 7 - 1), st.integers(0, 2 ** 7 - 1))
def test_column_rank_is_a_rank_function(m, a, b):
    A = {j for j in range(m.cols) if a >> j & 1}
    B = {j for j in range(m.cols) if b >> j & 1}
    ra, rb = column_rank(m, A), column_rank(m, B)
    assert column_rank(m, A | B) + column_rank(m, A & B) <= ra + rb
    assert ra <= column_rank(m, A | B)
    for x in range(m.cols):
        assert column_rank(m, A | {x}) - ra in (0, 1)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rref_is_idempotent(m):
    r, pivots, reduced = rref(m)
    assert rref(reduced) == (r, pivots, reduced)
