"""Simple undirected graphs with 1-based vertex labels.

Vertex sets and codes are passed around as Python ints used as bitmasks:
vertex ``v`` is bit ``v - 1``.  The helpers :func:`to_mask` and
:func:`from_mask` convert between masks and sorted vertex tuples.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, TextIO

__all__ = [
    "Graph",
    "Twins",
    "to_mask",
    "from_mask",
    "closed_neighbourhood",
    "i_set",
    "is_ld_code",
    "is_ld_star_code",
    "delete_vertices",
    "twins",
    "connected_components",
    "is_connected",
    "is_bipartite",
    "is_cactus",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``1..n``.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with
    ``u < v``.  Self-loops, duplicate edges and out-of-range endpoints raise
    ``ValueError``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be non-negative")
        adj = [0] * self.n
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_adjacency_masks(cls, adj: Iterable[int]) -> "Graph":
        adj = list(adj)
        edges = []
        for i, row in enumerate(adj):
            for j in from_mask(row >> (i + 1)):
                edges.append((i + 1, i + 1 + j))
        return cls(len(adj), tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise ValueError(f"vertex {v!r} not in 1..{self.n}")

    def code_mask(self, code: Iterable[int] | int) -> int:
        """Validate ``code`` (iterable of vertices, or a mask) and return its mask."""
        if isinstance(code, int):
            if code < 0 or code >> self.n:
                raise ValueError(f"mask {code:#x} has bits outside 1..{self.n}")
            return code
        mask = 0
        for v in code:
            self.check_vertex(v)
            mask |= 1 << (v - 1)
        return mask

    def open_mask(self, v: int) -> int:
        return self._adj[v - 1]

    def closed_mask(self, v: int) -> int:
        return self._adj[v - 1] | (1 << (v - 1))

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(a | (1 << i) for i, a in enumerate(self._adj))

    def neighbours(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return frozenset(from_mask(self._adj[v - 1]))

    def degree(self, v: int) -> int:
        return bin(self._adj[v - 1]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u - 1] >> (v - 1) & 1)


def closed_neighbourhood(G: Graph, v: int) -> frozenset[int]:
    G.check_vertex(v)
    return frozenset(from_mask(G.closed_mask(v)))


def i_set(G: Graph, S: Iterable[int] | int, v: int) -> frozenset[int]:
    """Codewords of ``S`` in the closed neighbourhood of ``v``."""
    G.check_vertex(v)
    return frozenset(from_mask(G.code_mask(S) & G.closed_mask(v)))


def _ld_mask(closed: tuple[int, ...], mask: int, excused: int = 0) -> bool:
    seen = set()
    for i, c in enumerate(closed):
        bit = 1 << i
        if mask & bit or excused & bit:
            continue
        iset = c & mask
        if not iset or iset in seen:
            return False
        seen.add(iset)
    return True


def is_ld_code(G: Graph, S: Iterable[int] | int) -> bool:
    """True iff ``S`` is a locating-dominating code of ``G``.

    The empty code is rejected with ``ValueError``.
    """
    mask = G.code_mask(S)
    if not mask:
        raise ValueError("an LD-code must be nonempty")
    return _ld_mask(G.closed_masks, mask)


def is_ld_star_code(n: int, S: Iterable[int] | int) -> bool:
    """LD* test on the path ``P_n``: the last vertex is exempt from being
    dominated and separated, but still counts as a potential codeword.
    ``S`` may be empty."""
    from .generators import path

    P = path(n)
    return _ld_mask(P.closed_masks, P.code_mask(S), excused=1 << (n - 1))


def delete_vertices(G: Graph, W: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(G) - W``, relabelled ``1..n-|W|`` in order.

    Returns ``(H, old_to_new)``.
    """
    wmask = G.code_mask(W)
    old_to_new: dict[int, int] = {}
    for v in G.vertices:
        if not wmask >> (v - 1) & 1:
            old_to_new[v] = len(old_to_new) + 1
    edges = tuple(
        (old_to_new[u], old_to_new[v])
        for u, v in G.edges
        if u in old_to_new and v in old_to_new
    )
    return Graph(len(old_to_new), edges), old_to_new


class Twins(Enum):
    NONE = "none"
    OPEN = "open"
    CLOSED = "closed"


def twins(G: Graph, u: int, v: int) -> Twins:
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise ValueError("twins() needs two distinct vertices")
    if G.closed_mask(u) == G.closed_mask(v):
        return Twins.CLOSED
    if G.open_mask(u) == G.open_mask(v):
        return Twins.OPEN
    return Twins.NONE


def twin_classes(G: Graph) -> list[tuple[int, ...]]:
    """Maximal sets of mutually twin vertices (size >= 2).

    Open-twin and closed-twin classes never overlap, so the result is a
    family of disjoint sets.
    """
    classes: dict[tuple[str, int], list[int]] = {}
    for v in G.vertices:
        classes.setdefault(("o", G.open_mask(v)), []).append(v)
        classes.setdefault(("c", G.closed_mask(v)), []).append(v)
    return sorted(tuple(c) for c in classes.values() if len(c) > 1)


def connected_components(G: Graph) -> list[frozenset[int]]:
    left = G.all_mask
    comps = []
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in from_mask(frontier):
                reach |= G.open_mask(v)
            frontier = reach & ~comp
            comp |= frontier
        comps.append(frozenset(from_mask(comp)))
        left &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def _bfs_forest(G: Graph) -> tuple[dict[int, int | None], dict[int, int]]:
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for root in G.vertices:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in from_mask(G.open_mask(x)):
                if y not in parent:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
    return parent, depth


def is_bipartite(G: Graph) -> bool:
    _, depth = _bfs_forest(G)
    return all((depth[u] - depth[v]) % 2 for u, v in G.edges)


def fundamental_cycles(G: Graph) -> list[list[tuple[int, int]]]:
    """One cycle (as an edge list) per non-tree edge of a BFS spanning forest."""
    parent, depth = _bfs_forest(G)
    tree = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    cycles = []
    for u, v in G.edges:
        if (u, v) in tree:
            continue
        cyc = [(u, v)]
        a, b = u, v
        while a != b:
            if depth[a] >= depth[b]:
                p = parent[a]
                cyc.append((min(a, p), max(a, p)))
                a = p
            else:
                p = parent[b]
                cyc.append((min(b, p), max(b, p)))
                b = p
        cycles.append(cyc)
    return cycles


def _blocks(G: Graph) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    t = 0
    for root in G.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, 0, iter(from_mask(G.open_mask(root))))]
        while stack:
            x, px, it = stack[-1]
            for y in it:
                if y == px:
                    continue
                if y not in disc:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, x, iter(from_mask(G.open_mask(y)))))
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] >= disc[p]:
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (p, x):
                                break
                        blocks.append(block)
    return blocks


def is_cactus(G: Graph) -> bool:
    """No two cycles share an edge, i.e. every block is an edge or a cycle."""
    for block in _blocks(G):
        verts = {v for e in block for v in e}
        if len(block) > 1 and len(block) != len(verts):
            return False
    return True


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` / edge-list text format (``#`` comments allowed)."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise ValueError("empty graph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise ValueError(f"non-integer token in graph file: {exc}") from None
    if len(header) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = header
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if len(body) != m:
        raise ValueError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for r in body:
        if len(r) != 2:
            raise ValueError(f"edge line must have two vertices: {r}")
        u, v = r
        if not u < v:
            raise ValueError(f"edge line must satisfy u < v: {r}")
        edges.append((u, v))
    return Graph(n, tuple(edges))


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_graph(fp: TextIO | str) -> Graph:
    if isinstance(fp, str):
        with open(fp) as fh:
            return parse_graph(fh.read())
    return parse_graph(fp.read())


def write_graph(G: Graph, fp: TextIO | str) -> None:
    if isinstance(fp, str):
        with open(fp, "w") as fh:
            fh.write(format_graph(G))
        return
    fp.write(format_graph(G))

