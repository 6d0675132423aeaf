"""Command-line front end.

Exit codes: 0 ok, 2 usage or input error, 3 certificate failure,
4 inconclusive (a search ran out of budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .analysis import analyze, check_propositions
from .constructions import RECIPES, CertificateError, RealizationError, build_recipe, special_examples
from .density import all_multiplicities, dense_hierarchy, k_dense_communities, k_dense_subgraph
from .enumerate import SearchConstraints, enumerate_graphs
from .formats import parse_edge_list, parse_graph, to_edge_list, to_graph6, from_graph6
from .graph import Graph, GraphError
from .search import (
    UNFILTERED_GUARD,
    Budget,
    GuardError,
    build_tables,
    conjecture_check,
    realization_scan,
    records_csv,
    records_json,
    search_max_edges,
    search_min_edges,
    upper_bound_table,
)

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_INCONCLUSIVE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"2..4"`` or ``"2,3,7"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                a, b = part.split("..")
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return out


def read_graph(args: argparse.Namespace) -> Graph:
    if args.g6 is not None:
        return from_graph6(args.g6.strip())
    if args.el is not None:
        g, _ = parse_edge_list(_read_text(args.el))
        return g
    path = args.input or args.file
    text = _read_text(path or "-")
    if not text.strip():
        raise UsageError("empty input")
    return parse_graph(text)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def to_dot(g: Graph, k: int | None = None) -> str:
    """DOT text; edges carry their multiplicity, those below ``k - 2`` in red."""
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v), mult in all_multiplicities(g).items():
        attrs = f'label="{mult}"'
        if k is not None and mult < k - 2:
            attrs += ", color=red"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_analyze(args) -> tuple[str, int]:
    g = read_graph(args)
    if args.format == "dot":
        return to_dot(g, args.k), EXIT_OK
    report = analyze(g)
    if args.format == "text":
        lines = [f"{key}: {report[key]}" for key in
                 ("n", "m", "degree_min", "degree_max", "k_star", "multiplicity_min")]
        lines.append(f"omega: {report['hierarchy']['omega']}  core: {report['hierarchy']['core']}")
        for chk in report["proposition_checks"]:
            lines.append(f"check {chk['id']}: {'pass' if chk['pass'] else 'FAIL'}")
        return "\n".join(lines) + "\n", EXIT_OK
    return _dump(report), EXIT_OK


def cmd_decompose(args) -> tuple[str, int]:
    g = read_graph(args)
    if args.k is not None:
        if args.k < 2:
            raise UsageError("--k must be at least 2")
        sub = k_dense_subgraph(g, args.k)
        if args.format == "dot":
            return to_dot(sub, args.k), EXIT_OK
        if args.format == "g6":
            return to_graph6(sub) + "\n", EXIT_OK
        levels = [{"k": args.k, "vertices": [v for v in range(g.n) if sub.adj[v]],
                   "edges": [list(e) for e in sub.edges()],
                   "communities": [sorted(c) for c in k_dense_communities(g, args.k)]}]
    else:
        if args.format == "dot":
            return to_dot(g), EXIT_OK
        dec = dense_hierarchy(g)
        levels = [{"k": lv.k, "vertices": sorted(lv.vertices), "edges": [list(e) for e in sorted(lv.edges)],
                   "communities": [sorted(c) for c in lv.communities]}
                  for lv in dec.levels.values() if lv.edges]
    if args.format == "text":
        out = []
        for lv in levels:
            comms = "; ".join(" ".join(map(str, c)) for c in lv["communities"])
            out.append(f"k={lv['k']}: {len(lv['edges'])} edges, communities: {comms or '-'}")
        return "\n".join(out) + "\n", EXIT_OK
    return _dump({"n": g.n, "m": g.m, "levels": levels}), EXIT_OK


def cmd_construct(args) -> tuple[str, int]:
    if args.recipe not in RECIPES:
        raise UsageError(f"unknown recipe {args.recipe!r}; choose from {', '.join(sorted(RECIPES))}")
    w = build_recipe(args.recipe, k=args.k, n=args.n, r=args.r, a=args.a, copies=args.copies)
    fmt = args.format or "g6"
    if fmt == "json":
        return _dump(w.to_json()), EXIT_OK
    if fmt == "text":
        return to_edge_list(w.graph), EXIT_OK
    if fmt == "dot":
        return to_dot(w.graph, w.certificate.k_star), EXIT_OK
    if fmt == "g6":
        return to_graph6(w.graph) + "\n", EXIT_OK
    raise UsageError(f"format {fmt} not available for construct")


def _records_out(records, fmt: str, timing: bool) -> tuple[str, int]:
    code = EXIT_INCONCLUSIVE if any(r.status == "inconclusive" for r in records) else EXIT_OK
    if fmt == "csv":
        return records_csv(records, timing), code
    if fmt == "text":
        return "".join(f"{r.kind} k={r.k} n={r.n}: {r.value_text()} ({r.method})\n" for r in records), code
    return records_json(records, timing), code


def cmd_search(args) -> tuple[str, int]:
    budget = Budget.parse(args.budget)
    ks, ns = parse_range(args.k), parse_range(args.n)
    if args.kind == "conjecture":
        rows = conjecture_check(ks, ns, budget, args.force)
        code = EXIT_INCONCLUSIVE if any(r.verdict == "inconclusive" for r in rows) else EXIT_OK
        if args.format == "text":
            return "".join(f"k={r.k} n={r.n}: exhaustive {r.exhaustive}, conjecture {r.conjecture}, "
                           f"{r.verdict}\n" for r in rows), code
        return _dump({"rows": [r.to_json() for r in rows]}), code
    fn = search_min_edges if args.kind == "min" else search_max_edges
    records = [fn(k, n, budget, args.force) for k in ks for n in ns if n >= k]
    return _records_out(records, args.format or "json", args.timing)


def cmd_scan(args) -> tuple[str, int]:
    budget = Budget.parse(args.budget)
    records = [realization_scan(k, n, budget, args.force)
               for k in parse_range(args.k) for n in parse_range(args.n) if n >= k]
    return _records_out(records, args.format or "json", args.timing)


def cmd_tables(args) -> tuple[str, int]:
    ks, ns = parse_range(args.k), parse_range(args.n)
    if args.kind == "upper-bound":
        rows = upper_bound_table((k, n) for k in ks for n in ns if n >= k)
        if args.format == "csv":
            head = "k,n,clique_chain,complement,smaller\n"
            body = "".join(f"{r['k']},{r['n']},{r['clique_chain']},"
                           f"{'' if r['complement'] is None else r['complement']},{r['smaller']}\n"
                           for r in rows)
            return head + body, EXIT_OK
        return _dump({"rows": rows}), EXIT_OK
    kinds = {"all": ("min", "max", "realization-set"), "extremal": ("min", "max")}.get(args.kind, (args.kind,))
    budget = Budget.parse(args.budget)
    limit = max(ns) if args.force else 9
    if args.force and max(ns) > 9 and budget == Budget():
        raise GuardError("forced tables beyond the guard need an explicit budget")
    records = build_tables(ks, ns, kinds, budget, exhaustive_limit=limit)
    return _records_out(records, args.format or "csv", args.timing)


def cmd_verify(args) -> tuple[str, int]:
    if args.what == "propositions":
        g = read_graph(args)
        results = [r.to_json() for r in check_propositions(g)]
        ok = all(r["pass"] for r in results)
        return _dump({"graph6": to_graph6(g), "pass": ok, "checks": results}), EXIT_OK if ok else EXIT_CERT
    if args.what == "constructions":
        items = [w.to_json() for w in special_examples()]
        return _dump({"pass": True, "witnesses": items}), EXIT_OK
    # enumerator: class counts for connected graphs
    ns = parse_range(args.n or "1..7")
    if max(ns) > UNFILTERED_GUARD and not args.force:
        raise GuardError(f"unfiltered enumeration is guarded at n <= {UNFILTERED_GUARD}")
    counts = {str(n): len(enumerate_graphs(SearchConstraints(n), max_n=max(n, 10)).graphs) for n in ns}
    return _dump({"connected_counts": counts}), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kdense", description="k-dense communities and extremal k*-dense graphs")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def graph_input(sp):
        sp.add_argument("file", nargs="?", help="graph6 or edge-list file, '-' for stdin")
        sp.add_argument("--input", help="same as the positional file")
        sp.add_argument("--g6", help="graph6 string")
        sp.add_argument("--el", help="edge-list file (skips format detection)")

    def common(sp, formats, default=None):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write output here instead of stdout")

    def search_flags(sp):
        sp.add_argument("--k", required=True, help="value or range, e.g. 4 or 2..4")
        sp.add_argument("--n", required=True, help="value or range")
        sp.add_argument("--budget", help="node count, or seconds with an s suffix")
        sp.add_argument("--force", action="store_true", help="allow n beyond the guard (needs --budget)")
        sp.add_argument("--timing", action="store_true", help="fill the seconds column")

    sp = sub.add_parser("analyze", help="density report for one graph")
    graph_input(sp)
    sp.add_argument("--k", type=int, help="threshold for DOT colouring")
    common(sp, ["json", "text", "dot"], "json")

    sp = sub.add_parser("decompose", help="k-dense subgraphs and communities")
    graph_input(sp)
    sp.add_argument("--k", type=int)
    common(sp, ["json", "text", "dot", "g6"], "json")

    sp = sub.add_parser("construct", help="build and certify a catalogued construction")
    sp.add_argument("recipe")
    for name in ("k", "n", "r", "a", "copies"):
        sp.add_argument(f"--{name}", type=int)
    common(sp, ["g6", "json", "text", "dot"])

    sp = sub.add_parser("search", help="exhaustive e(k,n), E(k,n) or conjecture check")
    sp.add_argument("kind", choices=["min", "max", "conjecture"])
    search_flags(sp)
    common(sp, ["json", "csv", "text"])

    sp = sub.add_parser("scan", help="exhaustive set of realisable edge counts")
    search_flags(sp)
    common(sp, ["json", "csv", "text"])

    sp = sub.add_parser("tables", help="extremal tables with provenance")
    search_flags(sp)
    sp.add_argument("--kind", default="extremal",
                    choices=["extremal", "all", "min", "max", "realization-set", "upper-bound"])
    common(sp, ["csv", "json"])

    sp = sub.add_parser("verify", help="self-checks")
    sp.add_argument("what", choices=["propositions", "constructions", "enumerator"])
    graph_input(sp)
    sp.add_argument("--n", help="range for the enumerator check")
    sp.add_argument("--force", action="store_true")
    common(sp, ["json"], "json")
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "construct": cmd_construct,
    "search": cmd_search,
    "scan": cmd_scan,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.verb](args)
    except (UsageError, GraphError, GuardError, ValueError) as exc:
        print(f"kdense: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificateError, RealizationError) as exc:
        print(f"kdense: certificate failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
