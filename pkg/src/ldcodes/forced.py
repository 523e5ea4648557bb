"""Min-forced and min-void vertices.

Two independent routes: the census oracle (intersect / unite every minimum
code) and the vertex-deletion characterisation, which only needs minimum
codes of ``G - v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, _ld_mask, delete_vertices, from_mask
from .solver import MinimumCodeCensus, enumerate_minimum_ld_codes, gamma_ld

__all__ = [
    "VertexClassification",
    "classify_oracle",
    "classify_census",
    "is_min_forced_characterization",
    "classify_by_characterization",
    "is_non_swappable",
]


@dataclass(frozen=True)
class VertexClassification:
    forced: frozenset[int]
    void: frozenset[int]
    free: frozenset[int]
    gamma: int


def classify_census(G: Graph, census: MinimumCodeCensus) -> VertexClassification:
    inter = G.all_mask
    union = 0
    for m in census.masks:
        inter &= m
        union |= m
    void = G.all_mask & ~union
    free = G.all_mask & ~inter & ~void
    return VertexClassification(
        frozenset(from_mask(inter)),
        frozenset(from_mask(void)),
        frozenset(from_mask(free)),
        census.gamma,
    )


def classify_oracle(G: Graph) -> VertexClassification:
    return classify_census(G, enumerate_minimum_ld_codes(G))


def is_min_forced_characterization(G: Graph, v: int, gamma: int | None = None) -> bool:
    """Decide whether ``v`` is min-forced using only ``gamma_ld(G)`` and the
    minimum codes of ``G - v``.

    ``v`` is forced iff it is isolated, or deleting it raises the LD number,
    or the LD number is unchanged and no minimum code of ``G - v`` (read in
    ``G``) both dominates ``v`` and separates it from every other
    non-codeword.
    """
    G.check_vertex(v)
    if G.open_mask(v) == 0:
        return True
    if gamma is None:
        gamma = gamma_ld(G)
    H, old_to_new = delete_vertices(G, [v])
    census = enumerate_minimum_ld_codes(H)
    if census.gamma > gamma:
        return True
    if census.gamma < gamma:
        return False
    new_to_old = {b: a for a, b in old_to_new.items()}
    closed_v = G.closed_mask(v)
    for code in census.codes:
        S = 0
        for x in code:
            S |= 1 << (new_to_old[x] - 1)
        target = S & closed_v
        if not target:
            continue
        clash = any(
            not S >> (w - 1) & 1 and G.closed_mask(w) & S == target
            for w in G.vertices
            if w != v
        )
        if not clash:
            return False
    return True


def classify_by_characterization(G: Graph) -> frozenset[int]:
    gamma = gamma_ld(G)
    return frozenset(v for v in G.vertices if is_min_forced_characterization(G, v, gamma))


def is_non_swappable(G: Graph, S: Iterable[int] | int, v: int) -> bool:
    """True iff no single swap ``S - v + u`` (u outside S) is an LD-code."""
    mask = G.code_mask(S)
    G.check_vertex(v)
    if not mask >> (v - 1) & 1:
        raise ValueError(f"vertex {v} is not a codeword")
    closed = G.closed_masks
    base = mask & ~(1 << (v - 1))
    for u in G.vertices:
        if mask >> (u - 1) & 1:
            continue
        if _ld_mask(closed, base | 1 << (u - 1)):
            return False
    return True
