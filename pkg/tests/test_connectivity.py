from __future__ import annotations

import math

import pytest

from trimatroid.connectivity import (BasepointColoopError, BasepointLoopError,
                                     NotBinaryError, NotExactTwoSeparationError,
                                     OperandTooSmallError, Separation, SharedNotCircuitError,
                                     SharedSetSizeError, decompose_two_sum, find_k_separation,
                                     is_k_separation, one_sum, same_labelled_circuits, three_sum,
                                     tutte_connectivity, two_sum)
from trimatroid.field import FieldMatrix
from trimatroid.graphs import cycle_graph
from trimatroid.matroid import Matroid, mask_of, with_labels
from trimatroid.minors import isomorphic
from trimatroid.oracles import minimal_elements_sum


def triangle(labels):
    return Matroid.from_circuits(3, [[0, 1, 2]], labels)


def labelled_sets(m):
    return {frozenset(m.labels[e] for e in range(m.n) if c >> e & 1) for c in m.circuit_masks()}


def test_connectivity_examples(cat):
    assert tutte_connectivity(one_sum(triangle("abc"), triangle("def"))) == 1
    assert tutte_connectivity(cat("U2,4")) == math.inf
    assert tutte_connectivity(cat("MK4")) >= 3
    assert tutte_connectivity(cat("R10")) >= 3


def test_one_sum_of_triangles():
    s = one_sum(triangle("abc"), triangle("def"))
    assert s.n == 6 and s.rank() == 4
    assert labelled_sets(s) == {frozenset("abc"), frozenset("def")}


def test_two_sum_of_triangles_is_a_four_cycle():
    s = two_sum(triangle("abz"), triangle("zcd"))
    assert labelled_sets(s) == {frozenset("abcd")}
    assert isomorphic(s, Matroid.from_graph(cycle_graph(4))) is not None


def fano(labels):
    cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    return Matroid.from_matrix(FieldMatrix.from_columns(cols, 2), labels)


def test_three_sum_of_fanos_matches_the_definition():
    # {0,1,3} is a line of this Fano ordering; glue both copies along it
    a = fano(["x", "y", "a2", "z", "a4", "a5", "a6"])
    b = fano(["x", "y", "b2", "z", "b4", "b5", "b6"])
    s = three_sum(a, b)
    assert s.n == 8
    assert labelled_sets(s) == minimal_elements_sum(a, b)


def test_sum_preconditions():
    with pytest.raises(SharedSetSizeError):
        one_sum(triangle("abz"), triangle("zcd"))
    with pytest.raises(SharedSetSizeError):
        two_sum(triangle("abc"), triangle("def"))
    with pytest.raises(OperandTooSmallError):
        two_sum(Matroid.from_circuits(2, [[0, 1]], ["a", "z"]), triangle("zcd"))
    loop = Matroid.from_circuits(3, [[2], [0, 1]], ["a", "b", "z"])
    with pytest.raises(BasepointLoopError):
        two_sum(loop, triangle("zcd"))
    coloop = Matroid.from_circuits(3, [[0, 1]], ["a", "b", "z"])
    with pytest.raises(BasepointColoopError):
        two_sum(coloop, triangle("zcd"))


def test_three_sum_preconditions(cat):
    u = with_labels(Matroid.uniform(2, 7), ["x", "y", "z", "a", "b", "c", "d"])
    with pytest.raises(NotBinaryError):
        three_sum(u, fano(["x", "y", "e", "z", "f", "g", "h"]))
    # {0,1,2} is a basis of the Fano plane, not a circuit
    with pytest.raises(SharedNotCircuitError):
        three_sum(fano(["x", "y", "z", "a", "b", "c", "d"]),
                  fano(["x", "y", "z", "e", "f", "g", "h"]))


def test_two_sum_output_has_the_exact_separation():
    m1 = with_labels(Matroid.uniform(2, 4), ["a", "b", "c", "z"])
    m2 = with_labels(Matroid.uniform(2, 4), ["z", "d", "e", "f"])
    s = two_sum(m1, m2)
    x = mask_of(i for i, lab in enumerate(s.labels) if lab in "abc")
    assert is_k_separation(s, x, 2)
    assert find_k_separation(s, 2) is not None


def test_no_separations_where_none_exist(cat):
    assert find_k_separation(cat("MK5"), 2) is None
    assert find_k_separation(cat("F7"), 1) is None


def test_decompose_four_cycle():
    s = two_sum(triangle("abz"), triangle("zcd"))
    x = mask_of(i for i, lab in enumerate(s.labels) if lab in "ab")
    n1, n2, z = decompose_two_sum(s, Separation(x, s.full & ~x, 2, True))
    assert isomorphic(n1, Matroid.uniform(2, 3)) is not None
    assert isomorphic(n2, Matroid.uniform(2, 3)) is not None
    assert z in n1.labels and z in n2.labels
    assert same_labelled_circuits(two_sum(n1, n2), s)


def test_decompose_rejects_three_connected(cat):
    m = cat("MK4")
    with pytest.raises(NotExactTwoSeparationError):
        decompose_two_sum(m, Separation(0b000111, 0b111000, 2, True))
