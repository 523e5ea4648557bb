"""``ld`` command line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or input
errors.  ``--output lines`` (the default) prints ``key=value`` records;
``--output human`` prints a short readable report instead.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import reproduce
from .colour_graph import AUX, build_colour_graph, check_forced_bounds, colour_edge_counts, two_edge_subgraph, verify_structure
from .forced import classify_by_characterization, classify_oracle
from .generators import (
    broom,
    cycle,
    min_void_extremal,
    path,
    read_dimacs,
    sat_reduction,
    star,
    verify_reduction,
)
from .graph import Graph, format_graph, is_ld_code, read_graph
from .path_counting import brute_count, c_closed_form, c_of_n
from .solver import enumerate_minimum_ld_codes, gamma_ld

SUBCOMMANDS = [
    "gamma", "enumerate", "forced", "void", "colour-graph", "count-paths",
    "gen", "verify-reduction", "check-bounds", "reproduce-all",
]


class UsageError(Exception):
    pass


class Out:
    def __init__(self, mode: str, stream=None):
        self.mode = mode
        self.stream = stream or sys.stdout

    def kv(self, key: str, value, human: str | None = None) -> None:
        if self.mode == "lines":
            print(f"{key}={value}", file=self.stream)
        else:
            print(human if human is not None else f"{key}: {value}", file=self.stream)

    def raw(self, text: str) -> None:
        print(text, file=self.stream)


def _vs(vertices) -> str:
    return ",".join(str(v) for v in sorted(vertices))


def _load_graph(path_: str) -> Graph:
    try:
        return read_graph(path_)
    except OSError as exc:
        raise UsageError(f"cannot read {path_}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{path_}: {exc}") from None


def _parse_code(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad code {text!r}; expected comma-separated vertices") from None


def cmd_gamma(args, out: Out) -> int:
    G = _load_graph(args.graph)
    out.kv("gamma", gamma_ld(G), f"location-domination number: {gamma_ld(G)}")
    return 0


def cmd_enumerate(args, out: Out) -> int:
    G = _load_graph(args.graph)
    census = enumerate_minimum_ld_codes(G)
    out.kv("gamma", census.gamma)
    out.kv("count", census.count, f"minimum codes: {census.count}")
    limit = census.count if args.max_report is None else args.max_report
    for code in census.codes[:limit]:
        out.kv("code", _vs(code), "  {" + ", ".join(map(str, code)) + "}")
    return 0


def cmd_forced(args, out: Out) -> int:
    G = _load_graph(args.graph)
    status = 0
    if args.method in ("oracle", "both"):
        forced = classify_oracle(G).forced
    if args.method in ("characterization", "both"):
        by_char = classify_by_characterization(G)
        if args.method == "both" and by_char != forced:
            out.kv("forced_characterization", _vs(by_char))
            out.kv("agreement", "no", "methods DISAGREE")
            status = 1
        forced = by_char
    out.kv("forced", _vs(forced), f"min-forced vertices: {_vs(forced) or '(none)'}")
    if args.method == "both" and status == 0:
        out.kv("agreement", "yes", "oracle and characterization agree")
    return status


def cmd_void(args, out: Out) -> int:
    G = _load_graph(args.graph)
    c = classify_oracle(G)
    out.kv("void", _vs(c.void), f"min-void vertices: {_vs(c.void) or '(none)'}")
    return 0


def cmd_colour_graph(args, out: Out) -> int:
    G = _load_graph(args.graph)
    code = _parse_code(args.code)
    try:
        if not code or not is_ld_code(G, code):
            raise UsageError(f"{args.code} is not an LD-code of the graph")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    CG = build_colour_graph(G, code)
    out.raw(f"# colour graph: vertices 0..{G.n} (0 is auxiliary), {len(CG.colours)} edges")
    for (x, y), c in sorted(CG.colours.items()):
        out.raw(f"{x} {y} colour={c}")
    status = 0
    if args.verify:
        rep = verify_structure(CG, G, code)
        for name, ok in rep.checks.items():
            out.kv(f"check_{name}", "pass" if ok else "fail")
        status |= not rep.ok
    if args.two_edge_subgraph:
        if args.two_edge_subgraph == "forced":
            chosen = sorted(classify_oracle(G).forced & set(code))
        elif args.two_edge_subgraph == "all":
            chosen = [u for u, (_, inner) in colour_edge_counts(CG, code).items() if inner >= 2]
        else:
            chosen = _parse_code(args.two_edge_subgraph)
        try:
            H = two_edge_subgraph(CG, code, chosen)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.kv("h_colours", _vs(chosen))
        out.kv("h_vertices", H.order)
        out.kv("h_edges", H.size)
        out.kv("h_components", H.components)
        out.kv("h_bipartite", H.bipartite)
        out.kv("h_cactus", H.cactus)
        out.kv("h_bound", "tight" if H.bound_tight else ("holds" if H.bound_holds else "fails"))
        status |= not H.ok
    return int(status)


def cmd_count_paths(args, out: Out) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be positive")
    brute_max = args.verify_brute or 0
    if brute_max > 25:
        raise UsageError("--verify-brute is limited to 25")
    status = 0
    if out.mode == "human":
        out.raw(f"{'n':>4} {'recurrence':>12} {'closed':>12} {'brute':>8}")
    for n in range(1, args.n_max + 1):
        rec = c_of_n(n)
        closed = c_closed_form(n) if n >= 5 else None
        brute = brute_count(n) if n <= brute_max else None
        values = [v for v in (rec, closed, brute) if v is not None]
        if len(set(values)) > 1:
            status = 1
        cells = ["-" if v is None else str(v) for v in (rec, closed, brute)]
        if out.mode == "lines":
            out.raw(f"n={n} recurrence={cells[0]} closed={cells[1]} brute={cells[2]}")
        else:
            out.raw(f"{n:>4} {cells[0]:>12} {cells[1]:>12} {cells[2]:>8}")
    out.kv("agreement", "yes" if status == 0 else "no")
    return status


def cmd_gen(args, out: Out) -> int:
    fam, params = args.family, args.params
    header = ""
    try:
        ints = [int(p) for p in params] if fam != "reduction" else []
        if fam == "path" and len(ints) == 1:
            G = path(*ints)
        elif fam == "cycle" and len(ints) == 1:
            G = cycle(*ints)
        elif fam == "star" and len(ints) == 1:
            G = star(*ints)
        elif fam == "broom" and len(ints) == 2:
            G = broom(*ints)
        elif fam == "voidext" and len(ints) == 1:
            G = min_void_extremal(*ints)
        elif fam == "reduction" and len(params) == 1:
            R = sat_reduction(read_dimacs(params[0]))
            G = R.graph
            header = "".join(f"# {v} {r}_{i}\n" if i else f"# {v} {r}\n" for v, (r, i) in sorted(R.roles.items()))
        else:
            raise UsageError(f"wrong parameters for gen {fam}: {' '.join(params)}")
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    text = header + format_graph(G)
    if args.o:
        with open(args.o, "w") as fh:
            fh.write(text)
    else:
        out.stream.write(text)
    return 0


def cmd_verify_reduction(args, out: Out) -> int:
    try:
        F = read_dimacs(args.cnf)
        rep = verify_reduction(F)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cnf}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.kv("satisfiable", rep.satisfiable)
    out.kv("gamma", rep.gamma)
    out.kv("expected_gamma", rep.expected_gamma)
    out.kv("count", rep.code_count)
    out.kv("w_forced", rep.w_forced)
    out.kv("v_void", rep.v_void)
    for name, ok in rep.checks.items():
        out.kv(f"check_{name}", "pass" if ok else "fail")
    return 0 if rep.ok else 1


def cmd_check_bounds(args, out: Out) -> int:
    G = _load_graph(args.graph)
    try:
        rep = check_forced_bounds(G)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.kv("n", rep.n)
    out.kv("gamma", rep.gamma)
    out.kv("k", rep.k)
    out.kv("forced", _vs(rep.forced))
    if rep.k:
        out.kv("slack_two_thirds", f"{rep.slack_void_bound:.6g}")
        out.kv("slack_two_fifths", f"{rep.slack_ratio_bound:.6g}")
        out.kv("slack_gamma", rep.slack_gamma_bound)
        out.kv("tight_two_thirds", rep.void_bound_tight)
        out.kv("tight_two_fifths", rep.ratio_bound_tight)
    out.kv("bounds", "hold" if rep.holds else "violated")
    return 0 if rep.holds else 1


def cmd_reproduce_all(args, out: Out) -> int:
    seed = args.seed if args.seed is not None else reproduce.default_seed()
    out.kv("seed", seed)
    try:
        results = reproduce.run(args.only, seed, echo=out.raw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = [r.number for r in results if not r.passed]
    out.kv("passed", len(results) - len(failed))
    out.kv("failed", len(failed))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ld", description="Minimum locating-dominating codes.")
    p.add_argument("--output", choices=["lines", "human"], default="lines")
    sub = p.add_subparsers(dest="command", metavar="{" + ",".join(SUBCOMMANDS) + "}")
    sub.required = True

    s = sub.add_parser("gamma", help="location-domination number")
    s.add_argument("graph")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("enumerate", help="all minimum LD-codes")
    s.add_argument("graph")
    s.add_argument("--max-report", type=int, default=None)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("forced", help="min-forced vertices")
    s.add_argument("graph")
    s.add_argument("--method", choices=["oracle", "characterization", "both"], default="oracle")
    s.set_defaults(func=cmd_forced)

    s = sub.add_parser("void", help="min-void vertices")
    s.add_argument("graph")
    s.set_defaults(func=cmd_void)

    s = sub.add_parser("colour-graph", help="colour graph of a code")
    s.add_argument("graph")
    s.add_argument("--code", required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--two-edge-subgraph", metavar="forced|all|v1,v2,...")
    s.set_defaults(func=cmd_colour_graph)

    s = sub.add_parser("count-paths", help="number of minimum codes in paths")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--verify-brute", type=int, default=0)
    s.set_defaults(func=cmd_count_paths)

    s = sub.add_parser("gen", help="write a graph from a named family")
    s.add_argument("family", choices=["path", "cycle", "star", "broom", "voidext", "reduction"])
    s.add_argument("params", nargs="*")
    s.add_argument("-o", metavar="FILE")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify-reduction", help="check the 3-SAT reduction on a DIMACS file")
    s.add_argument("cnf")
    s.set_defaults(func=cmd_verify_reduction)

    s = sub.add_parser("check-bounds", help="forced-vertex bounds")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check_bounds)

    s = sub.add_parser("reproduce-all", help="run every reproduction criterion")
    s.add_argument("--only", action="append", metavar="GROUP", help=f"one of {reproduce.GROUPS} or a criterion number")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_reproduce_all)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.output)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"ld {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
