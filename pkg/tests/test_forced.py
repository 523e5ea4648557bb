from functools import reduce

import pytest
from hypothesis import given

from ldcodes.forced import (
    classify_by_characterization,
    classify_oracle,
    is_min_forced_characterization,
    is_non_swappable,
)
from ldcodes.generators import broom, min_void_extremal, path, star
from ldcodes.graph import Graph
from oracles import naive_min_codes
from strategies import connected_graphs, graphs


def test_path10_classification():
    c = classify_oracle(path(10))
    assert c.forced == {2, 4, 7, 9}
    assert c.void == {1, 3, 5, 6, 8, 10}
    assert c.free == frozenset() and c.gamma == 4


def test_min_void_extremal_h2():
    assert len(classify_oracle(min_void_extremal(2)).void) == 3


def test_p7_forced_is_intersection():
    _, codes = naive_min_codes(path(7).edges, 7)
    assert classify_oracle(path(7)).forced == reduce(set.__and__, map(set, codes))


@pytest.mark.parametrize("G, v, expected", [
    (path(10), 7, True),
    (path(10), 1, False),
    (broom(9, 1), 9, True),
])
def test_characterization_examples(G, v, expected):
    assert is_min_forced_characterization(G, v) is expected


@pytest.mark.parametrize("G, forced", [
    (path(5), {2, 4}),
    (path(6), set()),
    (broom(14, 3), {2, 4, 7, 9, 12, 14}),
])
def test_forced_sets(G, forced):
    assert classify_oracle(G).forced == forced
    assert classify_by_characterization(G) == forced


@given(graphs(max_n=7))
def test_characterization_matches_census(G):
    _, codes = naive_min_codes(G.edges, G.n)
    forced = reduce(set.__and__, map(set, codes))
    assert classify_by_characterization(G) == forced


def test_isolated_vertex_forced():
    G = Graph(3, ((1, 2),))
    assert is_min_forced_characterization(G, 3)


def test_non_swappable():
    assert is_non_swappable(path(10), {2, 4, 7, 9}, 2)
    assert not is_non_swappable(path(2), {1}, 1)
    # leaves 2, 3 of a star are open twins
    assert not is_non_swappable(star(3), {1, 2, 3}, 2)
    with pytest.raises(ValueError):
        is_non_swappable(path(10), {2, 4, 7, 9}, 3)
