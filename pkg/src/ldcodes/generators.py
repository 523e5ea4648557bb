"""Graph families: paths, cycles, stars, brooms, the min-void extremal graphs,
the 3-SAT reduction graph, and seeded random connected graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, TextIO

import numpy as np

from .graph import Graph
from .solver import enumerate_minimum_ld_codes

__all__ = [
    "path",
    "cycle",
    "star",
    "broom",
    "min_void_extremal",
    "random_connected",
    "CnfInstance",
    "ReductionGraph",
    "sat_reduction",
    "parse_dimacs",
    "format_dimacs",
    "read_dimacs",
    "brute_force_sat",
    "ReductionReport",
    "verify_reduction",
]

MAX_REDUCTION_ORDER = 24


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 1, leaves 2..leaves+1."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, tuple((1, i) for i in range(2, leaves + 2)))


def broom(s: int, t: int) -> Graph:
    """Path v_1..v_s with t pendant vertices s+1..s+t attached to v_s."""
    if s < 1 or t < 1:
        raise ValueError("broom needs s >= 1 and t >= 1")
    edges = [(i, i + 1) for i in range(1, s)]
    edges += [(s, s + j) for j in range(1, t + 1)]
    return Graph(s + t, tuple(edges))


def min_void_extremal(h: int) -> Graph:
    """Independent set 1..h plus one vertex per nonempty subset T of it,
    adjacent exactly to T.  Subset vertices follow in increasing binary
    order of T."""
    if h < 2:
        raise ValueError("h must be at least 2")
    if h > 6:
        raise ValueError("h > 6 gives graphs beyond the solver limit")
    edges = []
    for t in range(1, 1 << h):
        x = h + t
        edges += [(i + 1, x) for i in range(h) if t >> i & 1]
    return Graph(h + (1 << h) - 1, tuple(edges))


def random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """Random spanning tree plus independent extra edges with ``edge_prob``."""
    if not 2 <= n <= 64:
        raise ValueError("random_connected needs 2 <= n <= 64")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n) + 1
    edges = set()
    for i in range(1, n):
        u, v = int(order[i]), int(order[rng.integers(i)])
        edges.add((min(u, v), max(u, v)))
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class CnfInstance:
    """A 3-CNF formula.  Literals are DIMACS-style signed ints: ``+i`` is the
    variable ``x_i`` and ``-i`` its negation."""

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n_vars < 1:
            raise ValueError("need at least one variable")
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise ValueError(f"literal {lit} out of range")
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Iterable[bool]) -> bool:
        a = list(assignment)
        return all(any(a[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def brute_force_sat(F: CnfInstance) -> tuple[bool, ...] | None:
    """A satisfying assignment, or None."""
    for a in product((False, True), repeat=F.n_vars):
        if F.satisfied_by(a):
            return a
    return None


def parse_dimacs(text: str) -> CnfInstance:
    n_vars = None
    declared = None
    lits: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            n_vars, declared = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise ValueError("clause before 'p cnf' header")
        lits.extend(int(x) for x in line.split())
    if n_vars is None:
        raise ValueError("missing 'p cnf' header")
    clauses = []
    cur: list[int] = []
    for x in lits:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise ValueError("last clause is not zero-terminated")
    if len(clauses) != declared:
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfInstance(n_vars, tuple(clauses))


def format_dimacs(F: CnfInstance) -> str:
    lines = [f"p cnf {F.n_vars} {F.m}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in F.clauses]
    return "\n".join(lines) + "\n"


def read_dimacs(fp: TextIO | str) -> CnfInstance:
    if isinstance(fp, str):
        with open(fp) as fh:
            return parse_dimacs(fh.read())
    return parse_dimacs(fp.read())


@dataclass(frozen=True)
class ReductionGraph:
    """Reduction graph with a role for every vertex.

    Roles are pairs such as ``("x", i)``, ``("xbar", i)``, ``("a", i)``,
    ``("b", i)``, ``("alpha", j)``, ``("beta", j)``, ``("gamma", j)``,
    ``("w", 0)`` and ``("v", 0)``.
    """

    graph: Graph
    cnf: CnfInstance
    roles: dict[int, tuple[str, int]]

    def vertex(self, role: str, index: int = 0) -> int:
        return self._index[(role, index)]

    @property
    def _index(self) -> dict[tuple[str, int], int]:
        return {r: v for v, r in self.roles.items()}

    def literal_vertex(self, lit: int) -> int:
        return self.vertex("x" if lit > 0 else "xbar", abs(lit))


def sat_reduction(F: CnfInstance) -> ReductionGraph:
    """Variable gadgets x_i-a_i-xbar_i-b_i-x_i, clause paths alpha-beta-gamma,
    alpha_j joined to w and its literals, and the pendant edge w-v."""
    roles: dict[int, tuple[str, int]] = {}
    for i in range(1, F.n_vars + 1):
        base = 4 * (i - 1)
        for off, r in enumerate(("x", "xbar", "a", "b")):
            roles[base + off + 1] = (r, i)
    base = 4 * F.n_vars
    for j in range(1, F.m + 1):
        for off, r in enumerate(("alpha", "beta", "gamma")):
            roles[base + 3 * (j - 1) + off + 1] = (r, j)
    w = 4 * F.n_vars + 3 * F.m + 1
    roles[w] = ("w", 0)
    roles[w + 1] = ("v", 0)
    idx = {r: v for v, r in roles.items()}

    edges = set()

    def add(u: int, v: int) -> None:
        edges.add((min(u, v), max(u, v)))

    for i in range(1, F.n_vars + 1):
        x, xb, a, b = (idx[(r, i)] for r in ("x", "xbar", "a", "b"))
        add(x, a)
        add(a, xb)
        add(xb, b)
        add(b, x)
    for j, clause in enumerate(F.clauses, start=1):
        al, be, ga = (idx[(r, j)] for r in ("alpha", "beta", "gamma"))
        add(al, be)
        add(be, ga)
        add(w, al)
        for lit in clause:
            add(al, idx[("x" if lit > 0 else "xbar", abs(lit))])
    add(w, w + 1)
    return ReductionGraph(Graph(len(roles), tuple(sorted(edges))), F, roles)


@dataclass(frozen=True)
class ReductionReport:
    satisfiable: bool
    gamma: int
    expected_gamma: int
    code_count: int
    no_alpha: bool
    one_literal_per_variable: bool
    one_of_w_v: bool
    w_forced: bool
    v_void: bool

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "gamma": self.gamma == self.expected_gamma,
            "fact_no_alpha": self.no_alpha,
            "fact_one_literal": self.one_literal_per_variable,
            "fact_one_of_w_v": self.one_of_w_v,
            "w_forced_iff_unsat": self.w_forced == (not self.satisfiable),
            "v_void_iff_unsat": self.v_void == (not self.satisfiable),
        }

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def verify_reduction(F: CnfInstance, max_order: int = MAX_REDUCTION_ORDER) -> ReductionReport:
    """Decide F by brute force, take the full minimum-code census of its
    reduction graph, and collect the facts linking the two."""
    R = sat_reduction(F)
    if R.graph.n > max_order:
        raise ValueError(f"reduction graph has {R.graph.n} vertices, limit is {max_order}")
    census = enumerate_minimum_ld_codes(R.graph)
    codes = [set(c) for c in census.codes]
    alphas = {R.vertex("alpha", j) for j in range(1, F.m + 1)}
    pairs = [(R.vertex("x", i), R.vertex("xbar", i)) for i in range(1, F.n_vars + 1)]
    w, v = R.vertex("w"), R.vertex("v")
    return ReductionReport(
        satisfiable=brute_force_sat(F) is not None,
        gamma=census.gamma,
        expected_gamma=2 * F.n_vars + F.m + 1,
        code_count=census.count,
        no_alpha=all(not (S & alphas) for S in codes),
        one_literal_per_variable=all((x in S) != (xb in S) for S in codes for x, xb in pairs),
        one_of_w_v=all((w in S) != (v in S) for S in codes),
        w_forced=all(w in S for S in codes),
        v_void=all(v not in S for S in codes),
    )
