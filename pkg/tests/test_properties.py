from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimatroid import properties
from trimatroid.matroid import dual, popcount

seeds = st.integers(0, 2 ** 32 - 1)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_rank_axioms(seed):
    assert properties.rank_axioms(random.Random(seed)) is None


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_circuit_elimination(seed):
    assert properties.circuit_elimination(random.Random(seed)) is None


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_duality(seed):
    assert properties.duality(random.Random(seed)) is None


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_cocircuits_meet_circuits_properly(seed):
    # a circuit and a cocircuit never share exactly one element
    m = properties.random_matroid(random.Random(seed))
    for c in m.circuit_masks():
        for d in dual(m).circuit_masks():
            assert popcount(c & d) != 1


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_two_sum_round_trip(seed):
    assert properties.two_sum_round_trip(random.Random(seed)) is None


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_minor_soundness(seed):
    assert properties.minor_soundness(random.Random(seed)) is None


@pytest.mark.parametrize("name", properties.SUITE_NAMES)
def test_suites_run_clean_on_a_short_budget(name):
    (res,) = properties.run_suites(seed=99, count=40, only=[name])
    assert res.instances == 40 and res.violations == []
