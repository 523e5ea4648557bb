import io

import pytest
from hypothesis import given, strategies as st

from ldcodes.generators import cycle, path, star
from ldcodes.graph import (
    Graph,
    Twins,
    closed_neighbourhood,
    connected_components,
    delete_vertices,
    format_graph,
    i_set,
    is_bipartite,
    is_cactus,
    is_connected,
    is_ld_code,
    is_ld_star_code,
    parse_graph,
    read_graph,
    twins,
    write_graph,
)
from oracles import cycles_share_edge, naive_is_ld
from strategies import graphs

K4 = Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))


def test_closed_neighbourhoods():
    assert closed_neighbourhood(path(3), 2) == {1, 2, 3}
    assert closed_neighbourhood(path(3), 1) == {1, 2}
    assert closed_neighbourhood(star(3), 1) == {1, 2, 3, 4}


def test_i_sets():
    S = {2, 4, 7, 9}
    assert i_set(path(10), S, 3) == {2, 4}
    assert i_set(path(10), S, 9) == {9}
    assert i_set(path(10), [], 5) == frozenset()


def test_is_ld_code_examples():
    assert is_ld_code(path(10), {2, 4, 7, 9})
    assert is_ld_code(K4, K4.vertices)
    assert not is_ld_code(path(3), {2})
    assert not naive_is_ld(path(3).edges, 3, {2})


def test_empty_code_rejected():
    with pytest.raises(ValueError):
        is_ld_code(path(3), [])


def test_ld_star():
    assert is_ld_star_code(1, [])
    assert is_ld_star_code(5, {1, 3})
    assert not is_ld_star_code(5, {1, 2})


def test_bad_vertex():
    with pytest.raises(ValueError):
        is_ld_code(path(3), {4})


@given(graphs(max_n=7), st.data())
def test_matches_naive_ld(G, data):
    S = data.draw(st.sets(st.integers(1, G.n), min_size=1))
    assert is_ld_code(G, S) == naive_is_ld(G.edges, G.n, S)


@given(graphs(max_n=8), st.data())
def test_supersets_stay_ld(G, data):
    S = data.draw(st.sets(st.integers(1, G.n), min_size=1))
    if is_ld_code(G, S):
        extra = data.draw(st.sets(st.integers(1, G.n)))
        assert is_ld_code(G, S | extra)


def test_delete_vertices_examples():
    H, m = delete_vertices(path(10), [10])
    assert H == path(9)
    H, m = delete_vertices(path(10), [5])
    assert sorted(len(c) for c in connected_components(H)) == [4, 5]
    assert m[6] == 5 and 5 not in m
    H, m = delete_vertices(K4, [])
    assert H == K4 and m == {v: v for v in K4.vertices}


@given(graphs(min_n=3, max_n=8), st.data())
def test_delete_vertices_composes(G, data):
    a = data.draw(st.sets(st.integers(1, G.n), max_size=G.n - 2))
    rest = [v for v in G.vertices if v not in a]
    b = data.draw(st.sets(st.sampled_from(rest), max_size=len(rest) - 1))
    H1, m1 = delete_vertices(G, a)
    H2, m2 = delete_vertices(H1, [m1[v] for v in b])
    H, m = delete_vertices(G, a | b)
    assert H == H2
    assert m == {v: m2[m1[v]] for v in m}


def test_twins():
    assert twins(star(3), 2, 3) is Twins.OPEN
    assert twins(path(2), 1, 2) is Twins.CLOSED
    assert twins(path(4), 1, 3) is Twins.NONE


def test_components():
    assert len(connected_components(path(5))) == 1
    assert len(connected_components(Graph(3, ((1, 2),)))) == 2
    assert len(connected_components(Graph(3, ()))) == 3
    assert is_connected(path(5)) and not is_connected(Graph(2, ()))


def test_cactus_examples():
    assert is_cactus(cycle(4)) and is_bipartite(cycle(4))
    assert not is_cactus(K4)
    bowtie = Graph(7, ((1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)))
    assert is_cactus(bowtie)
    assert not is_bipartite(cycle(5))


@given(graphs(max_n=7))
def test_cactus_matches_cycle_pairs(G):
    assert is_cactus(G) == (not cycles_share_edge(G.edges, G.n))


def test_round_trip(tmp_path):
    G = Graph(5, ((1, 2), (2, 5), (3, 4)))
    assert parse_graph(format_graph(G)) == G
    p = tmp_path / "g.txt"
    write_graph(G, str(p))
    assert read_graph(str(p)) == G
    assert read_graph(io.StringIO("# comment\n2 1\n1 2\n")) == path(2)


@pytest.mark.parametrize("text", [
    "",
    "0 0\n",
    "3 2\n1 2\n",
    "3 1\n2 1\n",
    "3 1\n1 4\n",
    "3 2\n1 2\n1 2\n",
    "2 1\n1 x\n",
])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_graph(text)
