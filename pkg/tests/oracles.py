"""Slow, set-based reference implementations used only by the tests."""
from __future__ import annotations

from itertools import combinations

import networkx as nx


def nbhd(edges, n):
    N = {v: {v} for v in range(1, n + 1)}
    for u, v in edges:
        N[u].add(v)
        N[v].add(u)
    return N


def naive_is_ld(edges, n, S, excused=()):
    S = set(S)
    N = nbhd(edges, n)
    seen = set()
    for v in range(1, n + 1):
        if v in S or v in excused:
            continue
        I = frozenset(N[v] & S)
        if not I or I in seen:
            return False
        seen.add(I)
    return True


def naive_min_codes(edges, n):
    for k in range(1, n + 1):
        found = [c for c in combinations(range(1, n + 1), k) if naive_is_ld(edges, n, c)]
        if found:
            return k, found
    raise AssertionError("V(G) is always an LD-code")


def cycles_share_edge(edges, n):
    """True iff two distinct simple cycles share an edge (i.e. not a cactus)."""
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    G.add_edges_from(edges)
    cycles = [frozenset(frozenset(e) for e in zip(c, c[1:] + c[:1])) for c in nx.simple_cycles(G)]
    return any(a & b for a, b in combinations(cycles, 2))
