"""Colour graphs of locating-dominating codes.

The colour graph of an LD-code S of G lives on ``V(G)`` plus an auxiliary
vertex, labelled 0, whose I-set is always empty.  Two vertices x, y outside
``S - u`` are joined by an edge of colour u whenever their I-sets under
``S - u`` coincide, so u is the only codeword telling them apart (or, for an
edge to 0, the only codeword dominating the other end).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    _ld_mask,
    connected_components,
    from_mask,
    fundamental_cycles,
    is_bipartite,
    is_cactus,
)

__all__ = [
    "AUX",
    "ColourGraph",
    "build_colour_graph",
    "StructureReport",
    "verify_structure",
    "colour_edge_counts",
    "swap_witness",
    "TwoEdgeSubgraph",
    "two_edge_subgraph",
    "ForcedBoundsReport",
    "check_forced_bounds",
]

AUX = 0

Edge = tuple[int, int]


@dataclass(frozen=True)
class ColourGraph:
    """Edges are ``(x, y)`` with ``x < y`` mapped to their colour."""

    n: int
    code: frozenset[int]
    colours: dict[Edge, int]

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.colours)

    def non_code_edges(self) -> dict[Edge, int]:
        """Edges of the colour graph with both ends outside the code."""
        return {e: c for e, c in self.colours.items() if e[0] not in self.code and e[1] not in self.code}

    def incident(self, x: int) -> list[Edge]:
        return [e for e in self.edges if x in e]

    def with_edges(self, colours: dict[Edge, int]) -> "ColourGraph":
        return ColourGraph(self.n, self.code, dict(colours))


def _iset(G: Graph, S: int, x: int) -> int:
    return 0 if x == AUX else G.closed_mask(x) & S


def build_colour_graph(G: Graph, S: Iterable[int] | int) -> ColourGraph:
    mask = G.code_mask(S)
    if not mask or not _ld_mask(G.closed_masks, mask):
        raise ValueError("colour graphs are defined for LD-codes only")
    colours: dict[Edge, int] = {}
    for u in from_mask(mask):
        rest = mask & ~(1 << (u - 1))
        groups: dict[int, list[int]] = {}
        for x in [AUX, *G.vertices]:
            if x != AUX and rest >> (x - 1) & 1:
                continue
            groups.setdefault(_iset(G, rest, x), []).append(x)
        for members in groups.values():
            for x, y in combinations(members, 2):
                if (x, y) in colours:
                    raise AssertionError(f"edge {(x, y)} received two colours")
                colours[(x, y)] = u
    return ColourGraph(G.n, frozenset(from_mask(mask)), colours)


def _as_graph(vertices: Iterable[int], edges: Iterable[Edge]) -> Graph:
    label = {x: i + 1 for i, x in enumerate(sorted(vertices))}
    return Graph(len(label), tuple((label[a], label[b]) for a, b in edges))


def _trails(adj: dict[int, list[tuple[int, Edge]]], max_len: int, budget: int):
    """Edge-simple walks of length 1..max_len, depth first, at most ``budget``."""
    count = 0
    for start in sorted(adj):
        stack = [(start, [start], [])]
        while stack:
            x, verts, used = stack.pop()
            for y, e in adj[x]:
                if e in used:
                    continue
                walk = (verts + [y], used + [e])
                yield walk
                count += 1
                if count >= budget:
                    return
                if len(walk[1]) < max_len:
                    stack.append((y, *walk))


@dataclass
class StructureReport:
    checks: dict[str, bool] = field(default_factory=dict)
    walks_checked: int = 0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def verify_structure(
    CG: ColourGraph,
    G: Graph,
    S: Iterable[int] | int,
    max_walk_length: int = 8,
    walk_budget: int = 20000,
) -> StructureReport:
    """Check the structural properties (i)-(viii) of a colour graph.

    (vii) is checked as bipartiteness of ``CG - S`` plus even colour counts
    on a fundamental cycle basis; parity is additive under symmetric
    difference, so this covers every cycle.  (viii) is checked on
    edge-simple walks up to ``max_walk_length``, stopping after
    ``walk_budget`` walks.
    """
    code = frozenset(from_mask(G.code_mask(S)))
    col = CG.colours
    rep = StructureReport()

    rep.checks["i"] = all(not (x in code and y in code) for x, y in col)
    rep.checks["ii"] = all(c == x or c == y for (x, y), c in col.items() if x in code or y in code)

    outside = CG.non_code_edges()
    at: dict[int, list[tuple[int, Edge]]] = {}
    for (x, y) in outside:
        at.setdefault(x, []).append((y, (x, y)))
        at.setdefault(y, []).append((x, (x, y)))
    rep.checks["iii"] = all(
        len({outside[e] for _, e in nbrs}) == len(nbrs) for nbrs in at.values()
    )

    def adjacent(u: int, x: int) -> bool:
        return x != AUX and G.has_edge(u, x)

    rep.checks["iv"] = all(adjacent(c, x) != adjacent(c, y) for (x, y), c in outside.items())

    def has(a: int, b: int, c: int) -> bool:
        return col.get((min(a, b), max(a, b))) == c

    ok_v = True
    nodes = [AUX] + [x for x in range(1, G.n + 1) if x not in code]
    for u in code:
        for x, y in combinations(nodes, 2):
            present = has(u, x, u) + has(u, y, u) + has(x, y, u)
            if present == 2:
                ok_v = False
    rep.checks["v"] = ok_v
    rep.checks["vi"] = all(len(CG.incident(u)) <= 2 for u in code)

    H = _as_graph(nodes, outside)
    label = {x: i + 1 for i, x in enumerate(sorted(nodes))}
    back = {i: x for x, i in label.items()}
    parity_ok = True
    for cyc in fundamental_cycles(H):
        counts: dict[int, int] = {}
        for a, b in cyc:
            e = (min(back[a], back[b]), max(back[a], back[b]))
            counts[outside[e]] = counts.get(outside[e], 0) + 1
        if any(c % 2 for c in counts.values()):
            parity_ok = False
    rep.checks["vii"] = parity_ok and is_bipartite(H)

    ok_viii = True
    for verts, used in _trails(at, max_walk_length, walk_budget):
        rep.walks_checked += 1
        counts = {}
        for e in used:
            counts[outside[e]] = counts.get(outside[e], 0) + 1
        if all(c % 2 == 0 for c in counts.values()) and verts[0] != verts[-1]:
            ok_viii = False
            break
    rep.checks["viii"] = ok_viii
    return rep


def colour_edge_counts(CG: ColourGraph, S: Iterable[int] | int | None = None) -> dict[int, tuple[int, int]]:
    """Colour -> (edges in CG, edges in CG - S)."""
    code = CG.code if S is None else frozenset(S if not isinstance(S, int) else from_mask(S))
    out = {u: [0, 0] for u in sorted(code)}
    for (x, y), c in CG.colours.items():
        out.setdefault(c, [0, 0])[0] += 1
        if x not in code and y not in code:
            out[c][1] += 1
    return {u: (a, b) for u, (a, b) in out.items()}


def _constructive_swap(G: Graph, CG: ColourGraph, u: int) -> int | None:
    """Candidate replacement for codeword u following the case analysis for
    codewords with fewer than two u-coloured edges between non-codewords."""
    code = CG.code
    mine = [e for e, c in CG.colours.items() if c == u]
    inner = [e for e in mine if e[0] not in code and e[1] not in code]
    touching = [e[0] if e[1] == u else e[1] for e in mine if u in e]

    def adj(a: int, b: int) -> bool:
        return AUX not in (a, b) and G.has_edge(a, b)

    def near_end(x: int, y: int) -> tuple[int, int]:
        # endpoint adjacent to u first
        return (x, y) if adj(u, x) else (y, x)

    if not mine:
        outside = [x for x in G.vertices if x not in code]
        return outside[0] if outside else None
    if len(inner) >= 2:
        return None
    if len(mine) == 1:
        if inner:
            return near_end(*inner[0])[0]
        x = touching[0]
        if x != AUX:
            return x
        nbrs = sorted(G.neighbours(u))
        return nbrs[0] if nbrs else None
    if len(mine) == 2 and len(inner) == 1 and len(touching) == 1:
        x, y = near_end(*inner[0])
        z = touching[0]
        if y == AUX:
            return z if adj(x, z) else x
        if z == AUX:
            return x
        hits = adj(z, x) + adj(z, y)
        return {1: z, 2: y, 0: x}[hits]
    if len(inner) == 1 and len(touching) == 2:
        x, y = near_end(*inner[0])
        return y if adj(x, y) else x
    return None


def swap_witness(G: Graph, S: Iterable[int] | int, v: int, method: str = "constructive") -> int | None:
    """A vertex u with ``S - v + u`` an LD-code, or None.

    ``method="constructive"`` derives the candidate from the colour graph and
    only returns it if the swap really is an LD-code; ``method="search"``
    tries every non-codeword in increasing order.
    """
    mask = G.code_mask(S)
    G.check_vertex(v)
    if not mask >> (v - 1) & 1:
        raise ValueError(f"vertex {v} is not a codeword")
    closed = G.closed_masks
    base = mask & ~(1 << (v - 1))
    if method == "search":
        for u in G.vertices:
            if not mask >> (u - 1) & 1 and _ld_mask(closed, base | 1 << (u - 1)):
                return u
        return None
    if method != "constructive":
        raise ValueError(f"unknown method {method!r}")
    CG = build_colour_graph(G, mask)
    u = _constructive_swap(G, CG, v)
    if u is None or u == AUX or mask >> (u - 1) & 1:
        return None
    return u if _ld_mask(closed, base | 1 << (u - 1)) else None


@dataclass(frozen=True)
class TwoEdgeSubgraph:
    """Edge-induced subgraph of ``CG - S`` with two edges per chosen colour."""

    vertices: frozenset[int]
    colours: dict[Edge, int]
    bipartite: bool
    cactus: bool
    components: int

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.colours)

    @property
    def bound_holds(self) -> bool:
        """``|V| >= 3/4 |E| + cc`` (vacuous below four vertices)."""
        return self.order < 4 or 4 * self.order >= 3 * self.size + 4 * self.components

    @property
    def bound_tight(self) -> bool:
        return 4 * self.order == 3 * self.size + 4 * self.components

    @property
    def ok(self) -> bool:
        return self.bipartite and self.cactus and self.bound_holds


def two_edge_subgraph(
    CG: ColourGraph,
    S: Iterable[int] | int | None,
    chosen: Iterable[int],
    rng: random.Random | None = None,
) -> TwoEdgeSubgraph:
    """Keep exactly two ``CG - S`` edges of each colour in ``chosen``:
    the two lexicographically smallest, or a random pair when ``rng`` is
    given."""
    code = CG.code if S is None else frozenset(S if not isinstance(S, int) else from_mask(S))
    outside = {e: c for e, c in CG.colours.items() if e[0] not in code and e[1] not in code}
    picked: dict[Edge, int] = {}
    for u in sorted(set(chosen)):
        if u not in code:
            raise ValueError(f"colour {u} is not a codeword")
        mine = sorted(e for e, c in outside.items() if c == u)
        if len(mine) < 2:
            raise ValueError(f"colour {u} has only {len(mine)} edges outside the code")
        pair = rng.sample(mine, 2) if rng is not None else mine[:2]
        for e in pair:
            picked[e] = u
    verts = frozenset(x for e in picked for x in e)
    H = _as_graph(verts, picked)
    return TwoEdgeSubgraph(
        verts,
        picked,
        is_bipartite(H),
        is_cactus(H),
        len(connected_components(H)),
    )


@dataclass(frozen=True)
class ForcedBoundsReport:
    n: int
    gamma: int
    forced: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.forced)

    @property
    def slack_void_bound(self) -> float:
        """``2/3 (n - gamma) - k``."""
        return 2 * (self.n - self.gamma) / 3 - self.k

    @property
    def slack_ratio_bound(self) -> float:
        """``2n/5 - k``."""
        return 2 * self.n / 5 - self.k

    @property
    def slack_gamma_bound(self) -> int:
        """``n - 3 - gamma``."""
        return self.n - 3 - self.gamma

    @property
    def holds(self) -> bool:
        if self.k == 0:
            return True
        return (
            3 * self.k <= 2 * (self.n - self.gamma)
            and 5 * self.k <= 2 * self.n
            and self.gamma <= self.n - 3
        )

    @property
    def void_bound_tight(self) -> bool:
        return self.k > 0 and 3 * self.k == 2 * (self.n - self.gamma)

    @property
    def ratio_bound_tight(self) -> bool:
        return self.k > 0 and 5 * self.k == 2 * self.n


def check_forced_bounds(G: Graph, classification=None) -> ForcedBoundsReport:
    from .forced import classify_oracle
    from .graph import is_connected

    if G.n < 2 or not is_connected(G):
        raise ValueError("forced-vertex bounds need a connected graph with n >= 2")
    cls = classification if classification is not None else classify_oracle(G)
    return ForcedBoundsReport(G.n, cls.gamma, cls.forced)
