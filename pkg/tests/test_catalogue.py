import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from ldcodes.catalogue import canonical_form, connected_graph_catalogue, connected_graphs, generate_connected_graphs
from ldcodes.graph import Graph, is_connected
from strategies import graphs

# OEIS A001349
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return H


def _relabel(G, perm):
    return Graph(G.n, tuple((perm[u - 1], perm[v - 1]) for u, v in G.edges))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(G, rnd):
    perm = list(range(1, G.n + 1))
    rnd.shuffle(perm)
    assert canonical_form(G) == canonical_form(_relabel(G, perm))


@given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
def test_canonical_form_separates(G, H):
    same = G.n == H.n and nx.is_isomorphic(_nx(G), _nx(H))
    assert (canonical_form(G) == canonical_form(H)) == same


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    graphs_n = generate_connected_graphs(n)
    assert len(graphs_n) == CONNECTED_COUNTS[n]
    assert all(is_connected(G) and G.n == n for G in graphs_n)


def test_no_isomorphic_duplicates_n6():
    gs = [_nx(G) for G in connected_graphs(6)]
    hashes = [nx.weisfeiler_lehman_graph_hash(g) for g in gs]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if hashes[i] == hashes[j]:
                assert not nx.is_isomorphic(gs[i], gs[j])


def test_shipped_n8():
    gs = connected_graphs(8)
    assert len(gs) == CONNECTED_COUNTS[8]
    assert all(G.n == 8 and is_connected(G) for G in gs)
    assert len({canonical_form(G) for G in random.Random(0).sample(gs, 500)}) == 500


def test_catalogue_range():
    cat = connected_graph_catalogue(5, min_n=3)
    assert len(cat) == 2 + 6 + 21


@pytest.mark.slow
def test_regenerate_n8_matches_shipped():
    fresh = {canonical_form(G) for G in generate_connected_graphs(8)}
    assert fresh == {canonical_form(G) for G in connected_graphs(8)}
