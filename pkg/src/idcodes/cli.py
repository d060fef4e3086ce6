"""Command-line front end: gen, solve, check, enum, verify, convert.

Exit status is 0 on success, 1 when a counterexample or an invalid code is
reported, and 2 for usage or input errors.  Structured output goes to
stdout as JSON (sorted keys) or graph6/edge-list text; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import families as fam
from .codes import CodeKind, violation_witness
from .enumeration import (
    Graph6Error,
    GraphStream,
    enumerate_connected,
    enumerate_trees,
    parse_edgelists,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .graph import Graph, GraphError, as_bits
from .harness import CLAIMS, default_jobs, search_girth5_tight, verify
from .solver import GuardError, all_minimum_codes, minimum_code, minimum_code_oracle

FAMILIES = (
    "a_k", "calA", "extremal-tid", "corona", "path", "cycle", "star", "complete",
    "complete-minus-matching", "subdivided-star", "ld-gap", "sid-gap", "eid-gap", "calT",
)
GRAPH_FORMATS = ("graph6", "edgelist", "json")
TIGHTNESS_SEARCH = "girth5-tight"


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _int_list(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def graph_to_json(G: Graph, **extra) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()], "graph6": write_graph6(G), **extra}


def format_graphs(graphs: Iterable[Graph], fmt: str) -> str:
    graphs = list(graphs)
    if fmt == "graph6":
        return "".join(write_graph6(G) + "\n" for G in graphs)
    if fmt == "edgelist":
        return "\n".join(write_edgelist(G) for G in graphs)
    return "".join(_dumps(graph_to_json(G)) + "\n" for G in graphs)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def read_graphs(path: str, fmt: str = "graph6") -> list[Graph]:
    text = _read_text(path)
    if fmt == "edgelist":
        return parse_edgelists(text)
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# --- gen -----------------------------------------------------------------

def _need(value, name: str, family: str):
    if value is None:
        raise UsageError(f"family {family} needs --{name}")
    return value


def build_family(args) -> tuple[Graph, dict]:
    f = args.family
    extra: dict = {}
    if f == "a_k":
        G = fam.a_k(_need(args.k, "k", f))
    elif f == "calA":
        G = fam.family_A(_int_list(args.parts), args.universal)
    elif f == "extremal-tid":
        G = fam.extremal_tid(_int_list(args.parts), args.universal, _need(args.m, "m", f))
    elif f == "corona":
        base = parse_graph6(_need(args.base, "base", f))
        G = fam.corona(base, _need(args.t, "t", f))
    elif f in ("path", "cycle", "star", "complete"):
        G = fam.basic(f, _need(args.n, "n", f))
    elif f == "complete-minus-matching":
        G = fam.complete_minus_matching(_need(args.n, "n", f))
    elif f == "subdivided-star":
        G = fam.subdivided_star(_need(args.k, "k", f))
    elif f == "ld-gap":
        G = fam.ld_gap(_need(args.k, "k", f))
    elif f == "sid-gap":
        G = fam.sid_gap(_need(args.k, "k", f))
    elif f == "eid-gap":
        G = fam.eid_gap(_need(args.k, "k", f))
    else:  # calT
        ops = []
        for item in (args.ops or "").split(","):
            if not item.strip():
                continue
            name, _, vertex = item.partition(":")
            try:
                ops.append((name.strip(), int(vertex)))
            except ValueError:
                raise UsageError(f"bad operation {item!r}; expected phi1:V or phi2:V") from None
        member = fam.calT(ops)
        G = member.tree
        extra["status"] = list(member.status)
    return G, extra


def cmd_gen(args) -> int:
    G, extra = build_family(args)
    if args.format == "json":
        sys.stdout.write(_dumps(graph_to_json(G, **extra)) + "\n")
    else:
        sys.stdout.write(format_graphs([G], args.format))
    return 0


# --- solve / check -------------------------------------------------------

def solve_record(G: Graph, kind: CodeKind, oracle: bool = False, all_optima: bool = False) -> dict:
    result = (minimum_code_oracle if oracle else minimum_code)(G, kind)
    record = {"graph6": write_graph6(G), "n": G.n, "code": kind.value, **result.to_dict()}
    if all_optima and result.optimal:
        record["optima"] = [c.to_list() for c in all_minimum_codes(G, kind)]
    return record


def cmd_solve(args) -> int:
    kind = CodeKind.parse(args.code)
    records = [solve_record(G, kind, args.oracle, args.all_optima) for G in read_graphs(args.input, args.source_format)]
    if args.json:
        sys.stdout.write(_dumps(records) + "\n")
    else:
        sys.stdout.write("".join(_dumps(r) + "\n" for r in records))
    return 0


def cmd_check(args) -> int:
    kind = CodeKind.parse(args.code)
    members = _int_list(args.set)
    status = 0
    for G in read_graphs(args.input, args.source_format):
        as_bits(members, G.n)
        witness = violation_witness(G, kind, members)
        record = {"graph6": write_graph6(G), "code": kind.value, "set": sorted(set(members)),
                  "valid": witness is None}
        if witness is not None:
            record["violation"] = witness.to_dict()
            status = 1
        sys.stdout.write(_dumps(record) + "\n")
    return status


# --- enum / convert ------------------------------------------------------

def cmd_enum(args) -> int:
    if args.trees:
        stream = GraphStream(lambda: enumerate_trees(args.n), f"trees n={args.n}")
    else:
        stream = GraphStream(lambda: enumerate_connected(args.n, min_girth=args.min_girth),
                             f"connected graphs n={args.n}")
    stream = stream.filtered(twin_free=args.twin_free, identifiable=args.identifiable, min_girth=args.min_girth)
    sys.stdout.write(format_graphs(stream, args.format))
    return 0


def cmd_convert(args) -> int:
    sys.stdout.write(format_graphs(read_graphs(args.input, args.source_format), args.to))
    return 0


# --- verify --------------------------------------------------------------

def cmd_verify(args) -> int:
    source = None
    if args.source:
        reader = GraphStream.from_edgelist_file if args.source_format == "edgelist" else GraphStream.from_graph6_file
        source = reader(args.source)
    if args.claim == TIGHTNESS_SEARCH:
        max_n = args.max_n or 8
        if source is None:
            source = GraphStream.connected(range(1, max_n + 1), min_girth=5)
        source = source.filtered(connected=True, twin_free=True, min_girth=5)
        report = search_girth5_tight(max_n, source, relaxed=args.relaxed)
    else:
        report = verify(args.claim, args.max_n, source, jobs=args.jobs or default_jobs())
    sys.stdout.write(report.to_json() + "\n")
    return 1 if report.verdict == "fail" else 0


# --- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idcodes", description="Identifying-code solver and verification tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a member of a named family")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--parts", help="comma-separated A_k indices for calA / extremal-tid")
    gen.add_argument("--universal", action="store_true", help="join one universal vertex")
    gen.add_argument("--base", help="graph6 of the corona base graph")
    gen.add_argument("--ops", help="calT operations, e.g. phi2:3,phi1:0")
    gen.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    gen.set_defaults(func=cmd_gen)

    def add_input(p):
        p.add_argument("--in", dest="input", required=True, help="input file, or - for stdin")
        p.add_argument("--from", dest="source_format", choices=("graph6", "edgelist"), default="graph6")

    solve = sub.add_parser("solve", help="minimum code of each input graph")
    solve.add_argument("--code", required=True, choices=[k.value for k in CodeKind])
    add_input(solve)
    solve.add_argument("--all-optima", action="store_true")
    solve.add_argument("--oracle", action="store_true", help="use exhaustive search")
    solve.add_argument("--json", action="store_true", help="one JSON array instead of JSON lines")
    solve.set_defaults(func=cmd_solve)

    check = sub.add_parser("check", help="validate a given vertex set as a code")
    check.add_argument("--code", required=True, choices=[k.value for k in CodeKind])
    check.add_argument("--set", required=True, help="comma-separated 0-based vertices")
    add_input(check)
    check.set_defaults(func=cmd_check)

    enum = sub.add_parser("enum", help="enumerate graphs up to isomorphism")
    which = enum.add_mutually_exclusive_group(required=True)
    which.add_argument("--connected", action="store_true")
    which.add_argument("--trees", action="store_true")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--twin-free", action="store_true")
    enum.add_argument("--identifiable", action="store_true")
    enum.add_argument("--min-girth", type=int)
    enum.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    enum.set_defaults(func=cmd_enum)

    ver = sub.add_parser("verify", help="finite check of a stated result")
    ver.add_argument("--claim", required=True, choices=list(CLAIMS) + [TIGHTNESS_SEARCH])
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--source", help="graph file to check instead of the builtin enumeration")
    ver.add_argument("--from", dest="source_format", choices=("graph6", "edgelist"), default="graph6")
    ver.add_argument("--jobs", type=int, help="worker processes (default from IDCODES_JOBS)")
    ver.add_argument("--relaxed", action="store_true", help="compare against ceil(3n/4) in the tightness search")
    ver.set_defaults(func=cmd_verify)

    conv = sub.add_parser("convert", help="convert between graph formats")
    add_input(conv)
    conv.add_argument("--to", choices=GRAPH_FORMATS, required=True)
    conv.set_defaults(func=cmd_convert)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, Graph6Error, GuardError, ValueError, OSError) as exc:
        print(f"idcodes {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
