import numpy as np
import pytest
from hypothesis import given, strategies as st

from ldcodes.generators import broom, path, star
from ldcodes.graph import Graph, delete_vertices, connected_components, from_mask, is_ld_code
from ldcodes.solver import (
    SolverLimitError,
    enumerate_minimum_ld_codes,
    gamma_ld,
    gamma_ld_star,
    gamma_ld_star_exact,
    ld_filter,
    lower_bound_information,
    minimal_ld_codes,
)
from oracles import naive_is_ld, naive_min_codes
from strategies import graphs


@pytest.mark.parametrize("G, expected", [
    (path(10), 4),
    (star(4), 4),
    (broom(9, 2), 5),
    (path(1), 1),
])
def test_gamma_examples(G, expected):
    assert gamma_ld(G) == expected


def test_census_examples():
    assert enumerate_minimum_ld_codes(path(10)).codes == ((2, 4, 7, 9),)
    c2 = enumerate_minimum_ld_codes(path(2))
    assert c2.codes == ((1,), (2,)) and c2.count == 2
    assert enumerate_minimum_ld_codes(path(7)).count == 3


@pytest.mark.parametrize("n, k", [(1, 0), (5, 2), (11, 4)])
def test_ld_star_number(n, k):
    assert gamma_ld_star(n) == k
    assert gamma_ld_star_exact(n) == k


@pytest.mark.parametrize("n, k", [(5, 2), (6, 3), (10, 3)])
def test_information_bound(n, k):
    assert lower_bound_information(n) == k


@given(graphs(max_n=7))
def test_census_matches_naive(G):
    k, codes = naive_min_codes(G.edges, G.n)
    census = enumerate_minimum_ld_codes(G)
    assert census.gamma == k == gamma_ld(G)
    assert list(census.codes) == codes


@given(graphs(max_n=9))
def test_census_codes_are_minimum(G):
    census = enumerate_minimum_ld_codes(G)
    assert census.gamma >= lower_bound_information(G.n)
    for code in census.codes:
        assert len(code) == census.gamma
        assert is_ld_code(G, code)
        for v in code:
            rest = set(code) - {v}
            assert not rest or not is_ld_code(G, rest)
    assert list(census.codes) == sorted(census.codes)


@given(graphs(max_n=9))
def test_gamma_sums_over_components(G):
    total = 0
    for comp in connected_components(G):
        H, _ = delete_vertices(G, [v for v in G.vertices if v not in comp])
        total += gamma_ld(H)
    assert gamma_ld(G) == total


@given(graphs(max_n=6))
def test_ld_filter_matches_naive(G):
    closed = np.array(G.closed_masks, dtype=np.uint64)
    masks = np.arange(1, 1 << G.n, dtype=np.uint64)
    got = ld_filter(closed, masks)
    for m, ok in zip(masks, got):
        assert ok == naive_is_ld(G.edges, G.n, from_mask(int(m)))


@given(graphs(max_n=6))
def test_minimal_codes(G):
    codes = {m for m in range(1, 1 << G.n) if naive_is_ld(G.edges, G.n, from_mask(m))}
    expected = [m for m in sorted(codes) if not any(m & ~(1 << i) in codes for i in range(G.n) if m >> i & 1)]
    assert minimal_ld_codes(G) == expected


def test_limits():
    with pytest.raises(SolverLimitError):
        gamma_ld(path(65))
    with pytest.raises(SolverLimitError):
        minimal_ld_codes(path(17))


def test_larger_path_against_formula():
    # twin-free, so the sweep has to climb from the information bound
    assert gamma_ld(path(30)) == 12
