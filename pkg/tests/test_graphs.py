"""Degeneracy coloring, bipartite decomposition, mono induced-subgraph search."""

import random

import networkx as nx
import pytest

from gridlab.errors import ContractViolation
from gridlab.graphs import (
    Graph,
    bipartite_edge_decomposition,
    degeneracy_coloring,
    find_mono_induced_subgraph,
    is_bipartite,
    is_proper_coloring,
    random_degenerate_graph,
)


def _from_nx(g):
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph(g.number_of_nodes(),
                 [(mapping[u], mapping[v]) for u, v in g.edges()])


def test_graph_construction_rejects_loops():
    with pytest.raises(ContractViolation):
        Graph(2, [(0, 0)])
    with pytest.raises(ContractViolation):
        Graph(2, [(0, 5)])


def test_degeneracy_coloring_edgeless_and_tree():
    g = Graph(5)
    assert set(degeneracy_coloring(g)) == {0}
    tree = _from_nx(nx.random_labeled_tree(12, seed=3))
    colors = degeneracy_coloring(tree)
    assert is_proper_coloring(tree, colors)
    assert len(set(colors)) <= 2


def test_degeneracy_coloring_icosahedron():
    ico = _from_nx(nx.icosahedral_graph())
    assert ico.degeneracy() == 5
    colors = degeneracy_coloring(ico)
    assert is_proper_coloring(ico, colors)
    assert len(set(colors)) <= 6


def test_degeneracy_coloring_always_proper_random():
    rng = random.Random(7)
    for seed in range(10):
        g = random_degenerate_graph(20, 5, random.Random(seed))
        assert g.degeneracy() <= 5
        colors = degeneracy_coloring(g)
        assert is_proper_coloring(g, colors)
        assert len(set(colors)) <= 6


def test_bipartite_decomposition_classes():
    # A bipartite graph with a proper 2-coloring falls into one class.
    g = Graph(4, [(0, 2), (0, 3), (1, 2)])
    ec = bipartite_edge_decomposition(g, [0, 0, 1, 1])
    assert len(ec.color_set()) == 1
    triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
    ec = bipartite_edge_decomposition(triangle, [0, 1, 2])
    assert len(ec.color_set()) == 3
    with pytest.raises(ContractViolation):
        bipartite_edge_decomposition(triangle, [0, 0, 1])


def test_bipartite_decomposition_icosahedron():
    ico = _from_nx(nx.icosahedral_graph())
    colors = degeneracy_coloring(ico)
    ec = bipartite_edge_decomposition(ico, colors)
    assert len(ec.color_set()) <= 15
    for c in ec.color_set():
        ok, certificate = is_bipartite(ec.class_graph(c))
        assert ok and certificate is None


def test_is_bipartite_cycles():
    even = _from_nx(nx.cycle_graph(6))
    assert is_bipartite(even) == (True, None)
    odd = _from_nx(nx.cycle_graph(3))
    ok, cycle = is_bipartite(odd)
    assert not ok and len(cycle) == 3


def test_is_bipartite_matches_networkx_and_certifies():
    rng = random.Random(11)
    for seed in range(20):
        g = random_degenerate_graph(14, 4, random.Random(seed))
        nxg = nx.Graph(g.edges())
        nxg.add_nodes_from(range(g.n))
        ok, cycle = is_bipartite(g)
        assert ok == nx.is_bipartite(nxg)
        if not ok:
            assert len(cycle) % 2 == 1
            for i, u in enumerate(cycle):
                assert g.has_edge(u, cycle[(i + 1) % len(cycle)])


def test_grotzsch_graph_not_bipartite():
    grotzsch = _from_nx(nx.mycielski_graph(4))
    ok, cycle = is_bipartite(grotzsch)
    assert not ok and len(cycle) % 2 == 1


def test_find_mono_single_edge():
    g = Graph(3, [(0, 1), (1, 2)])
    ec = bipartite_edge_decomposition(g, degeneracy_coloring(g))
    edge = Graph(2, [(0, 1)])
    found = find_mono_induced_subgraph(g, edge, ec)
    assert found is not None
    empty = Graph(3)
    empty_ec = bipartite_edge_decomposition(empty, degeneracy_coloring(empty))
    assert find_mono_induced_subgraph(empty, edge, empty_ec) is None


def test_find_mono_triangle_never_in_decomposition():
    rng = random.Random(5)
    triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
    for seed in range(8):
        host = random_degenerate_graph(18, 5, random.Random(seed))
        ec = bipartite_edge_decomposition(host, degeneracy_coloring(host))
        assert find_mono_induced_subgraph(host, triangle, ec) is None


def test_find_mono_path_in_star_class():
    # A star is one bipartite class; an induced 3-path lives inside it.
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    ec = bipartite_edge_decomposition(star, [0, 1, 1, 1])
    path3 = Graph(3, [(0, 1), (1, 2)])
    found = find_mono_induced_subgraph(star, path3, ec)
    assert found is not None
    color, image = found
    assert len(set(image)) == 3


def test_induced_means_induced():
    # The 4-cycle contains no induced path on 4 vertices, only with a chord.
    c4 = _from_nx(nx.cycle_graph(4))
    ec = bipartite_edge_decomposition(c4, [0, 1, 0, 1])
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert find_mono_induced_subgraph(c4, p4, ec) is None
