from __future__ import annotations

import math
import random
from itertools import combinations

import pytest

from trimatroid.field import FieldMatrix
from trimatroid.graphs import MultiGraph, complete_graph, wheel_graph
from trimatroid.matroid import (MAX_ELEMENTS, Matroid, MatroidError, as_circuit_matroid,
                                circuits, cocircuits, contract, delete, dual, fournier_violation,
                                girth, is_binary_fournier, is_simple, mask_of, minor, popcount,
                                same_circuits, simplify, triangles)
from trimatroid.minors import isomorphic
from trimatroid.oracles import naive_circuits


def test_rank_examples(cat):
    assert cat("U2,4").rank() == 2
    assert cat("MK5").rank() == 4
    assert cat("F7").rank(mask_of([3, 4, 5])) == 2


def test_independence_examples(cat):
    f7 = cat("F7")
    assert f7.is_independent(0)
    loopy = Matroid.from_matrix(FieldMatrix.from_rows([[0, 1]], 2))
    assert not loopy.is_independent(1)
    assert all(f7.is_independent(1 << a | 1 << b) for a, b in combinations(range(7), 2))


def test_circuits_of_u24_are_the_triples(cat):
    assert sorted(circuits(cat("U2,4")).as_sets()) == sorted(
        frozenset(c) for c in combinations(range(4), 3))


def test_r10_has_no_small_circuits(cat):
    assert circuits(cat("R10"), max_size=3).masks == ()


def test_fano_circuits_match_exhaustive_scan(cat):
    f7 = cat("F7")
    circ = f7.circuit_masks()
    assert sorted(circ) == sorted(naive_circuits(f7))
    sizes = sorted(popcount(c) for c in circ)
    assert sizes == [3] * 7 + [4] * 7


@pytest.mark.parametrize("name,count", [("AG23", 4), ("MK5", 3), ("U2,4", 3), ("F7*", 0),
                                        ("F7", 3), ("MK4", 2)])
def test_uniform_triangle_profiles(cat, name, count):
    assert set(triangles(cat(name)).counts) == {count}


def test_girth_examples(cat):
    assert girth(cat("U2,4")) == 3
    assert girth(cat("R10")) == 4
    assert girth(Matroid.uniform(3, 3)) == math.inf


def test_dual_examples(cat):
    u24 = cat("U2,4")
    assert isomorphic(dual(u24), u24) is not None
    for r in (3, 4, 5):
        g = wheel_graph(r)
        assert same_circuits(dual(Matroid.from_graph(g)), Matroid.from_bond(g))
    for name in ("F7", "MK5", "AG23", "P7", "J", "W3"):
        m = cat(name)
        assert same_circuits(dual(dual(m)), m)
        assert dual(m).rank() == m.n - m.rank()
        assert sorted(cocircuits(m).masks) == sorted(dual(m).circuit_masks())


def test_r10_single_deletions(cat):
    r10, k33 = cat("R10"), cat("MK33")
    for e in range(10):
        assert isomorphic(delete(r10, 1 << e), k33) is not None


def test_delete_nothing_is_identity(cat):
    assert same_circuits(delete(cat("P7"), 0), cat("P7"))


def test_minor_operations_commute(cat):
    rng = random.Random(5)
    m = cat("J")
    for _ in range(20):
        d = c = 0
        for e in range(m.n):
            u = rng.random()
            if u < 0.2:
                d |= 1 << e
            elif u < 0.4:
                c |= 1 << e
        a = minor(m, d, c)
        # contracting first, then deleting, with indices shifted by hand
        after_c = contract(m, c)
        kept = [e for e in range(m.n) if not c >> e & 1]
        b = delete(after_c, mask_of(i for i, e in enumerate(kept) if d >> e & 1))
        assert same_circuits(a, b)


def test_simplify():
    f7 = Matroid.from_matrix(FieldMatrix.from_columns(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 2))
    s = simplify(f7)
    assert s.kept == tuple(range(7)) and same_circuits(s.matroid, f7)
    doubled = Matroid.from_matrix(FieldMatrix.from_columns(
        [(1, 0), (0, 1), (1, 0), (1, 1), (0, 1), (0, 0)], 3))
    s = simplify(doubled)
    assert s.matroid.n == 3 and is_simple(s.matroid)


def test_fournier_examples(cat):
    assert is_binary_fournier(cat("F7"))
    assert fournier_violation(cat("U2,4")) == (0b0111, 0b1011, (0, 1))
    assert not is_binary_fournier(cat("AG23"))


def test_graphic_triangle_counts_match_three_cycles():
    g = complete_graph(5)
    m = Matroid.from_graph(g)
    for e, (u, v) in enumerate(g.edges):
        assert triangles(m).counts[e] == 3


def test_backends_agree_with_circuit_lists(cat):
    for name in ("U2,4", "F7", "F7*", "MK4", "AG23", "P7", "W3", "Wheel3", "TU2,4"):
        m = cat(name)
        assert m.rank(m.full) == as_circuit_matroid(m).rank(m.full)
        assert sorted(m.circuit_masks()) == sorted(naive_circuits(m))


def test_constructor_errors():
    with pytest.raises(MatroidError):
        Matroid.from_circuits(3, [[0, 1], [0, 1, 2]])
    with pytest.raises(MatroidError):
        Matroid.uniform(5, 3)
    with pytest.raises(MatroidError):
        Matroid.uniform(1, MAX_ELEMENTS + 1)
    with pytest.raises(MatroidError):
        Matroid.from_graph(MultiGraph.of(2, [(0, 1)]), labels=["a", "a", "b"])
