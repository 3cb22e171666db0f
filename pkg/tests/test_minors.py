from __future__ import annotations

import random
from itertools import combinations

import pytest

from trimatroid.catalog import get
from trimatroid.field import FieldMatrix
from trimatroid.matroid import Matroid, dual, mask_of, minor, relabel
from trimatroid.minors import (SearchLimitError, canonical_form, has_minor, has_restriction,
                               isomorphic, three_connected_minors, verify_minor)
from trimatroid.oracles import (brute_force_isomorphism, brute_force_minors, rank_check_minor,
                                rank_check_restriction)


def test_isomorphism_examples(cat):
    f7 = cat("F7")
    assert isomorphic(f7, f7).mapping == tuple(range(7))
    assert isomorphic(cat("U2,4"), Matroid.uniform(3, 4)) is None
    assert isomorphic(cat("F7"), cat("F7*")) is None


def test_canonical_form_examples(cat):
    assert canonical_form(cat("U2,4")) == canonical_form(cat("W2"))
    assert canonical_form(cat("F7")) != canonical_form(cat("F7*"))
    rng = random.Random(3)
    f7 = cat("F7")
    want = canonical_form(f7)
    for _ in range(100):
        perm = list(range(7))
        rng.shuffle(perm)
        assert canonical_form(relabel(f7, perm)) == want


def test_minor_examples(cat):
    ag = cat("AG23")
    for target in ("MK4", "F7", "MK5"):
        assert has_minor(ag, cat(target)) is None
    w = has_minor(cat("J"), cat("P7"))
    assert w is not None
    assert rank_check_minor(cat("J"), cat("P7"), w.delete, w.contract, w.iso.mapping)


def test_u24_minor_of_ag23_against_exhaustive_oracle(cat):
    ag, u24 = cat("AG23"), cat("U2,4")
    w = has_minor(ag, u24)
    assert w is not None
    assert rank_check_minor(ag, u24, w.delete, w.contract, w.iso.mapping)
    assert next(brute_force_minors(ag, u24), None) is not None


def test_restriction_examples(cat):
    assert has_restriction(cat("AG23"), cat("U2,4")) is None
    w = has_restriction(cat("U2,5"), cat("U2,4"))
    assert w is not None and bin(w.subset).count("1") == 4
    f7, k4 = cat("F7"), cat("MK4")
    w = has_restriction(f7, k4)
    assert rank_check_restriction(f7, k4, w.subset, w.iso.mapping)
    hits = [s for s in combinations(range(7), 6)
            if brute_force_isomorphism(minor(f7, f7.full & ~mask_of(s)), k4)]
    assert len(hits) == 7


def test_no_false_negatives_against_exhaustive_oracle(cat):
    # every (host, target) pair the oracle finds must be found, and vice versa
    for host, target in [("P7", "U2,4"), ("F7", "U2,4"), ("MK4", "U2,4"), ("W3", "U2,4"),
                         ("P7", "MK4"), ("F7*", "MK4")]:
        h, t = cat(host), cat(target)
        found = has_minor(h, t) is not None
        assert found == (next(brute_force_minors(h, t), None) is not None), (host, target)


def test_minor_transitivity(cat):
    rng = random.Random(11)
    j = cat("J")
    for _ in range(8):
        d1 = mask_of(e for e in range(j.n) if rng.random() < 0.15)
        c1 = mask_of(e for e in range(j.n) if rng.random() < 0.15 and not d1 >> e & 1)
        n = minor(j, d1, c1)
        d2 = mask_of(e for e in range(n.n) if rng.random() < 0.2)
        p = minor(n, d2, 0)
        assert has_minor(n, p) is not None
        assert has_minor(j, p) is not None


@pytest.mark.parametrize("host,target", [("F7", "MK4"), ("AG23", "U2,4"), ("J", "P7"),
                                         ("MK5", "MK4"), ("R10", "MK4")])
def test_minor_duality(cat, host, target):
    h, t = cat(host), cat(target)
    assert (has_minor(h, t) is None) == (has_minor(dual(h), dual(t)) is None)


def small_matroids():
    rng = random.Random(7)
    out = [Matroid.uniform(r, n) for n in range(1, 7) for r in range(n + 1)]
    for _ in range(120):
        n = rng.randint(3, 6)
        p = rng.choice((2, 3))
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        out.append(Matroid.from_matrix(FieldMatrix.from_rows(rows, p, cols=n)))
    return out


def test_canonical_form_is_a_complete_invariant():
    ms = small_matroids()
    forms = [canonical_form(m) for m in ms]
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            a, b = ms[i], ms[j]
            if a.n != b.n:
                assert forms[i] != forms[j]
                continue
            iso = isomorphic(a, b) is not None
            assert (forms[i] == forms[j]) == iso
            if a.n <= 5:
                assert iso == (brute_force_isomorphism(a, b) is not None)


def test_three_connected_minors_of_u24(cat):
    classes = three_connected_minors(cat("U2,4"))
    assert canonical_form(cat("U2,4")) in [cf for cf, _ in classes]


def test_witnesses_reverify(cat):
    w = has_minor(cat("MK5"), cat("MK4"))
    assert verify_minor(cat("MK5"), cat("MK4"), w)


def test_size_caps():
    big = get("U", 2, 17)
    with pytest.raises(SearchLimitError):
        canonical_form(big)
    with pytest.raises(SearchLimitError):
        has_minor(big, Matroid.uniform(2, 4))
