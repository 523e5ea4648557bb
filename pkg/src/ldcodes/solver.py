"""Exact location-domination numbers and complete minimum-code censuses.

The search sweeps the cardinality ``k`` upward from a lower bound and
enumerates ``k``-subsets as uint64 bitmasks.  Subsets are produced in
blocks by splitting on the highest undecided vertex; a branch is dropped as
soon as some vertex has its whole closed neighbourhood excluded.  Each block
is checked with a vectorised LD test.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator

import numpy as np

from .graph import Graph, connected_components, delete_vertices, from_mask, twin_classes

__all__ = [
    "MAX_SOLVER_ORDER",
    "SolverLimitError",
    "MinimumCodeCensus",
    "ld_filter",
    "gamma_ld",
    "enumerate_minimum_ld_codes",
    "gamma_ld_star",
    "gamma_ld_star_exact",
    "lower_bound_information",
    "lower_bound_twins",
    "minimal_ld_codes",
]

MAX_SOLVER_ORDER = 64
BLOCK = 8192
ROWS = 1 << 15

_ONE = np.uint64(1)


class SolverLimitError(ValueError):
    """Raised when a graph is too large for the exact solver."""


def _bits(n: int) -> np.ndarray:
    return _ONE << np.arange(n, dtype=np.uint64)


def ld_filter(closed: np.ndarray, masks: np.ndarray, excused: int = 0) -> np.ndarray:
    """Vectorised LD test.

    ``closed`` holds the closed-neighbourhood mask of each vertex (uint64,
    length n) and ``masks`` a batch of candidate codes.  Vertices in
    ``excused`` need not be dominated or separated (used for LD*-codes).
    Returns a boolean array, one entry per mask.
    """
    n = len(closed)
    masks = np.asarray(masks, dtype=np.uint64)
    out = np.empty(len(masks), dtype=bool)
    bits = _bits(n)
    exc = np.uint64(excused)
    for lo in range(0, len(masks), ROWS):
        m = masks[lo:lo + ROWS]
        iset = m[:, None] & closed[None, :]
        free = ((m[:, None] | exc) & bits[None, :]) == 0
        ok = ~np.any(free & (iset == 0), axis=1)
        # codewords and excused vertices get sentinel values containing a
        # bit outside the code, so they can never equal a true I-set
        outside = ~m & (m + _ONE)
        vals = np.where(free, iset, bits[None, :] | outside[:, None])
        vals.sort(axis=1)
        ok &= ~np.any(vals[:, 1:] == vals[:, :-1], axis=1)
        out[lo:lo + ROWS] = ok
    return out


@lru_cache(maxsize=None)
def _comb_masks(i: int, k: int) -> np.ndarray:
    """All k-subsets of the low ``i`` bits, as a read-only uint64 array."""
    if k == 0:
        arr = np.zeros(1, dtype=np.uint64)
    elif k > i:
        arr = np.zeros(0, dtype=np.uint64)
    elif k == i:
        arr = np.array([(1 << i) - 1], dtype=np.uint64)
    else:
        arr = np.concatenate([
            _comb_masks(i - 1, k),
            _comb_masks(i - 1, k - 1) | (_ONE << np.uint64(i - 1)),
        ])
    arr.setflags(write=False)
    return arr


def _k_subsets(closed: tuple[int, ...], k: int, protected: int = 0) -> Iterator[np.ndarray]:
    """Blocks of k-subsets of ``range(n)`` that may still dominate every
    vertex outside ``protected``."""
    n = len(closed)
    watch = [c for i, c in enumerate(closed) if not protected >> i & 1]

    def rec(i: int, k: int, chosen: int, excluded: int) -> Iterator[np.ndarray]:
        for c in watch:
            if not c & ~excluded:
                return
        if k > i:
            return
        if comb(i, k) <= BLOCK:
            yield _comb_masks(i, k) | np.uint64(chosen)
            return
        bit = 1 << (i - 1)
        yield from rec(i - 1, k - 1, chosen | bit, excluded)
        yield from rec(i - 1, k, chosen, excluded | bit)

    yield from rec(n, k, 0, 0)


def _closed_array(closed: tuple[int, ...]) -> np.ndarray:
    return np.array(closed, dtype=np.uint64)


def lower_bound_information(n: int) -> int:
    """Smallest k with ``n <= 2**k - 1 + k``."""
    if n < 1:
        raise ValueError("n must be positive")
    k = 0
    while (1 << k) - 1 + k < n:
        k += 1
    return k


def lower_bound_twins(G: Graph) -> int:
    """Every class of t mutual twins needs at least t-1 codewords."""
    return sum(len(c) - 1 for c in twin_classes(G))


def _check_order(G: Graph) -> None:
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    if G.n > MAX_SOLVER_ORDER:
        raise SolverLimitError(f"order {G.n} exceeds the solver limit {MAX_SOLVER_ORDER}")


def _sweep(G: Graph, collect: bool) -> tuple[int, list[int]]:
    """Minimum LD cardinality of a connected graph, plus all minimum codes
    (as masks) when ``collect`` is set."""
    closed = G.closed_masks
    arr = _closed_array(closed)
    k = max(lower_bound_information(G.n), lower_bound_twins(G), 1)
    while True:
        found: list[int] = []
        for block in _k_subsets(closed, k):
            ok = ld_filter(arr, block)
            if ok.any():
                if not collect:
                    return k, []
                found.extend(int(x) for x in block[ok])
        if found:
            return k, found
        k += 1


def _components(G: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components as standalone graphs with their vertex labels."""
    comps = connected_components(G)
    if len(comps) == 1:
        return [(G, list(G.vertices))]
    out = []
    for comp in comps:
        H, old_to_new = delete_vertices(G, [v for v in G.vertices if v not in comp])
        out.append((H, sorted(old_to_new)))
    return out


def gamma_ld(G: Graph) -> int:
    """Location-domination number of ``G`` (sum over components)."""
    _check_order(G)
    return sum(_sweep(H, collect=False)[0] for H, _ in _components(G))


@dataclass(frozen=True)
class MinimumCodeCensus:
    """All minimum LD-codes of a graph, sorted lexicographically."""

    gamma: int
    codes: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.codes)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << (v - 1) for v in c) for c in self.codes)


def enumerate_minimum_ld_codes(G: Graph) -> MinimumCodeCensus:
    _check_order(G)
    gamma = 0
    per_comp = []
    for H, labels in _components(G):
        k, masks = _sweep(H, collect=True)
        gamma += k
        per_comp.append([tuple(labels[i - 1] for i in from_mask(m)) for m in masks])
    codes = sorted(tuple(sorted(v for part in combo for v in part)) for combo in product(*per_comp))
    return MinimumCodeCensus(gamma, tuple(codes))


def gamma_ld_star(n: int) -> int:
    """Minimum LD*-code size on ``P_n``, by the closed formula ``ceil(2(n-1)/5)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return -(-2 * (n - 1) // 5)


def ld_star_masks(n: int, k: int) -> list[int]:
    """All LD*-codes of size k on ``P_n`` (as masks), by exhaustive search."""
    from .generators import path

    closed = path(n).closed_masks
    last = 1 << (n - 1)
    arr = _closed_array(closed)
    out: list[int] = []
    for block in _k_subsets(closed, k, protected=last):
        ok = ld_filter(arr, block, excused=last)
        out.extend(int(x) for x in block[ok])
    return sorted(out)


def gamma_ld_star_exact(n: int) -> int:
    """Minimum LD*-code size on ``P_n`` by search (the empty code is allowed)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_SOLVER_ORDER:
        raise SolverLimitError(f"order {n} exceeds the solver limit")
    k = 0
    while not ld_star_masks(n, k):
        k += 1
    return k


def minimal_ld_codes(G: Graph, max_order: int = 16) -> list[int]:
    """All inclusion-minimal LD-codes of ``G`` as masks, by testing every subset."""
    _check_order(G)
    if G.n > max_order:
        raise SolverLimitError(f"minimal-code enumeration is limited to n <= {max_order}")
    masks = np.arange(1 << G.n, dtype=np.uint64)
    ld = ld_filter(_closed_array(G.closed_masks), masks)
    ld[0] = False
    minimal = ld.copy()
    for bit in _bits(G.n):
        has = (masks & bit) != 0
        minimal &= ~(has & ld[masks & ~bit])
    return [int(x) for x in masks[minimal]]
