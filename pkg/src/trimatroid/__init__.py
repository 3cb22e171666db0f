"""Small-matroid toolkit: rank oracles, minors, sums, and triangle-count checks."""

from __future__ import annotations

from .field import FieldError, FieldMatrix, PrimeField, rref
from .matroid import (Matroid, MatroidError, circuits, cocircuits, contract, delete, dual,
                      is_binary_fournier, is_simple, minor, rank, restrict, simplify, triangles)
from .connectivity import (Separation, SumError, decompose_two_sum, find_k_separation, k_sum,
                           one_sum, three_sum, tutte_connectivity, two_sum)
from .minors import (canonical_form, has_minor, has_restriction, isomorphic,
                     three_connected_minors)
from .graphs import MultiGraph, has_clique_minor
from .formats import ParseError, parse_graph, parse_matroid, serialize_matroid
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "FieldError", "FieldMatrix", "PrimeField", "rref",
    "Matroid", "MatroidError", "circuits", "cocircuits", "contract", "delete", "dual",
    "is_binary_fournier", "is_simple", "minor", "rank", "restrict", "simplify", "triangles",
    "Separation", "SumError", "decompose_two_sum", "find_k_separation", "k_sum", "one_sum",
    "three_sum", "tutte_connectivity", "two_sum",
    "canonical_form", "has_minor", "has_restriction", "isomorphic", "three_connected_minors",
    "MultiGraph", "has_clique_minor",
    "ParseError", "parse_graph", "parse_matroid", "serialize_matroid",
    "VerificationReport",
]
