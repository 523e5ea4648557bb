"""Isomorphism-free catalogue of small connected graphs.

Connected graphs on n vertices are grown from those on n-1 vertices by
attaching a new vertex to every nonempty neighbour set (every connected
graph has a non-cut vertex, so nothing is missed) and deduplicated with a
canonical form.  The canonical form is computed by colour refinement with
individualisation, taking the smallest adjacency certificate over all
leaves of the search tree.
"""
from __future__ import annotations

import gzip
from functools import lru_cache
from importlib import resources

from .graph import Graph, from_mask

__all__ = [
    "canonical_form",
    "connected_graphs",
    "generate_connected_graphs",
    "connected_graph_catalogue",
]

# n -> packaged catalogue, produced by generate_connected_graphs
_SHIPPED = {8: "connected8.txt.gz"}


def _refine(adj: tuple[int, ...], colours: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            for u in from_mask(adj[v]):
                c = colours[u - 1]
                counts[c] = counts.get(c, 0) + 1
            sigs.append((colours[v], tuple(sorted(counts.items()))))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colours)):
            return new
        colours = new


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    cert = 0
    n = len(adj)
    for v in order:
        row = 0
        for u in from_mask(adj[v]):
            row |= 1 << pos[u - 1]
        cert = (cert << n) | row
    return cert


def canonical_form(G: Graph) -> tuple[int, int]:
    """``(n, certificate)``; equal for two graphs iff they are isomorphic."""
    adj = G.adjacency_masks
    n = G.n
    best = None

    def search(colours: list[int]) -> None:
        nonlocal best
        colours = _refine(adj, colours)
        if len(set(colours)) == n:
            order = sorted(range(n), key=lambda v: colours[v])
            cert = _certificate(adj, order)
            if best is None or cert < best:
                best = cert
            return
        sizes: dict[int, int] = {}
        for c in colours:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        for v in range(n):
            if colours[v] == target:
                # split v off ahead of its cell; colours stay label-free
                search([2 * c + (c == target and u != v) for u, c in enumerate(colours)])

    search([0] * n)
    return n, best if best is not None else 0


def _load_shipped(name: str) -> tuple[Graph, ...]:
    raw = resources.files("ldcodes").joinpath("data", name).read_bytes()
    out = []
    for line in gzip.decompress(raw).decode().splitlines():
        if line.startswith("#"):
            continue
        edges = tuple(tuple(int(x) for x in e.split("-")) for e in line.split())
        n = max(max(e) for e in edges)
        out.append(Graph(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism, in a fixed order.

    Uses the packaged table where one exists (n = 8 takes about a minute to
    generate).
    """
    if n in _SHIPPED:
        return _load_shipped(_SHIPPED[n])
    return generate_connected_graphs(n)


@lru_cache(maxsize=None)
def generate_connected_graphs(n: int) -> tuple[Graph, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (Graph(1),)
    seen: dict[tuple[int, int], Graph] = {}
    for H in generate_connected_graphs(n - 1):
        adj = list(H.adjacency_masks)
        for nb in range(1, 1 << (n - 1)):
            new_adj = [a | ((1 << (n - 1)) if nb >> i & 1 else 0) for i, a in enumerate(adj)]
            new_adj.append(nb)
            G = Graph.from_adjacency_masks(new_adj)
            key = canonical_form(G)
            if key not in seen:
                seen[key] = G
    return tuple(seen[k] for k in sorted(seen))


def connected_graph_catalogue(max_n: int, min_n: int = 1) -> list[Graph]:
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out
