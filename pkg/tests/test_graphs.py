from __future__ import annotations

import random
from collections import Counter

import networkx as nx
import pytest

from trimatroid.graphs import (GraphError, MultiGraph, bond, complete_bipartite, complete_graph,
                               cut_cover_premise, cycle_graph, graphic, has_clique_minor,
                               is_3_edge_connected, is_clique_model, minimal_edge_cuts,
                               nontrivial_edge_cuts, prism_graph, simple_graphs, sweep_graphs,
                               triangles_through_edges)
from trimatroid.matroid import Matroid, dual, mask_of, same_circuits, triangles
from trimatroid.minors import isomorphic


def test_graphic_and_bond_examples():
    k4 = complete_graph(4)
    m = graphic(k4)
    assert len(triangles(m).triangles) == 4 and set(triangles(m).counts) == {2}
    assert isomorphic(graphic(cycle_graph(3)), Matroid.uniform(2, 3)) is not None
    assert same_circuits(bond(k4), dual(graphic(k4)))


def test_clique_minor_examples():
    sets = has_clique_minor(complete_graph(5), 5)
    assert sorted(map(sorted, sets)) == [[0], [1], [2], [3], [4]]
    k33 = complete_bipartite(3, 3)
    assert is_clique_model(k33, has_clique_minor(k33, 4))
    assert has_clique_minor(cycle_graph(6), 4) is None


def test_clique_minor_matches_networkx_on_small_graphs():
    # K4-minor-free graphs are exactly the graphs of treewidth at most 2
    for g in simple_graphs(6):
        h = nx.Graph(g.edges)
        h.add_nodes_from(range(g.vertices))
        width, _ = nx.algorithms.approximation.treewidth_min_degree(h)
        has_k4 = has_clique_minor(g, 4) is not None
        if width <= 2:
            assert not has_k4
        assert has_k4 != _series_parallel_reducible(h)


def _series_parallel_reducible(h: nx.Graph) -> bool:
    """Treewidth <= 2 test: drop degree <= 1 vertices, suppress degree-2 ones."""
    h = h.copy()
    while h.number_of_nodes():
        v = min(h.nodes, key=h.degree)
        if h.degree(v) > 2:
            return False
        nbrs = list(h.neighbors(v))
        h.remove_node(v)
        if len(nbrs) == 2:
            h.add_edge(*nbrs)
    return True


def test_edge_cut_examples():
    k4 = complete_graph(4)
    assert is_3_edge_connected(k4) and nontrivial_edge_cuts(k4, 3) == []
    prism = prism_graph()
    cuts = nontrivial_edge_cuts(prism, 3)
    assert len(cuts) == 1
    ends = {frozenset(prism.edges[e]) for e in cuts[0].edges}
    assert all(len({u // 3, v // 3}) == 2 for u, v in map(tuple, ends))
    assert not is_3_edge_connected(cycle_graph(5))


def test_cut_cover_premise_examples():
    for v in range(4):
        assert not cut_cover_premise(complete_graph(4), v)
    prism = prism_graph()
    assert not any(cut_cover_premise(prism, v) for v in range(6))
    # removing either vertex leaves no edge at all
    theta = MultiGraph.of(2, [(0, 1)] * 3)
    assert not cut_cover_premise(theta, 0)
    with pytest.raises(GraphError):
        cut_cover_premise(cycle_graph(4), 0)


def test_simple_graph_counts_match_the_atlas():
    atlas = Counter(g.number_of_nodes() for g in nx.graph_atlas_g())
    for n in range(1, 8):
        assert len(simple_graphs(n)) == atlas[n]
    assert [atlas[n] for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_sweep_counts():
    rep = sweep_graphs(4, lambda g: True, nmin=4)
    assert rep.graphs_checked == 11 and len(rep.witnesses) == 11


def test_triangle_profile_matches_graph_recount():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(3, 7)
        g = MultiGraph.of(n, [(a, b) for a in range(n) for b in range(a + 1, n)
                              if rng.random() < 0.5])
        assert list(triangles(graphic(g)).counts) == list(triangles_through_edges(g))


def test_cocircuits_are_minimal_edge_cuts():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(2, 7)
        g = MultiGraph.of(n, [(a, b) for a in range(n) for b in range(a + 1, n)
                              if rng.random() < 0.5])
        cuts = {mask_of(c) for c in minimal_edge_cuts(g)}
        assert cuts == set(dual(graphic(g)).circuit_masks())
