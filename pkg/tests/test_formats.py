from __future__ import annotations

import pytest

from trimatroid import catalog
from trimatroid.formats import (ParseError, decode_matroid, encode_matroid, parse_graph,
                                parse_matroid, serialize_graph, serialize_matroid)
from trimatroid.matroid import Matroid, same_circuits
from trimatroid.graphs import prism_graph

FANO_FILE = """\
# the Fano plane
name F7
kind linear
size 7
field 2
rows 3
1 0 0 1 1 0 1
0 1 0 1 0 1 1
0 0 1 0 1 1 1
"""


def test_fano_file():
    m = parse_matroid(FANO_FILE)
    assert (m.n, m.rank(), m.name) == (7, 3, "F7")
    assert same_circuits(m, catalog.get("F7"))


def test_empty_ground_set():
    m = parse_matroid("kind circuits\nsize 0\ncircuits 0\n")
    assert m.n == 0 and m.rank() == 0


def test_antichain_violation_is_semantic_error():
    with pytest.raises(ParseError) as err:
        parse_matroid("kind circuits\nsize 3\ncircuits 2\n0 1\n0 1 2\n")
    assert err.value.line == 3


def test_entry_outside_field():
    with pytest.raises(ParseError) as err:
        parse_matroid("kind linear\nsize 2\nfield 3\nrows 1\n1 3\n")
    assert (err.value.line, err.value.column) == (5, 3)


@pytest.mark.parametrize("text,line", [
    ("kind linear\nsize 2\nfield 2\nrows 2\n1 0\n", None),
    ("kind graph\nsize 1\nvertices 2\n0 5\n", 4),
    ("kind linear\nsize x\n", None),
    ("colour blue\n", 1),
    ("kind circuits\nsize 2\ncircuits 1\n0 1\nextra\n", 5),
    ("kind planar\nsize 1\nvertices 1\n0 0\n", 1),
    ("kind linear\nsize 2\nfield 2\nrows 1\n1 0 1\n", 5),
])
def test_malformed_files(text, line):
    with pytest.raises(ParseError) as err:
        parse_matroid(text)
    if line is not None:
        assert err.value.line == line


@pytest.mark.parametrize("name", ["F7", "F7*", "MK4", "AG23", "U2,4", "W3", "P7", "R10", "Wheel3"])
def test_round_trip(name):
    m = catalog.get_by_name(name)
    text = serialize_matroid(m)
    back = parse_matroid(text)
    assert serialize_matroid(back) == text
    assert back.kind == m.kind and back.labels == m.labels
    assert same_circuits(back, m)
    assert same_circuits(decode_matroid(encode_matroid(m)), m)


def test_labels_survive():
    m = Matroid.from_circuits(3, [[0, 1, 2]], ["a", "b", "c"], name="tri")
    back = parse_matroid(serialize_matroid(m))
    assert back.labels == ("a", "b", "c") and back.name == "tri"


def test_graph_files():
    g = prism_graph()
    assert parse_graph(serialize_graph(g)).edges == g.edges
    with pytest.raises(ParseError) as err:
        parse_graph("3\n0 1\n1 7\n")
    assert err.value.line == 3
