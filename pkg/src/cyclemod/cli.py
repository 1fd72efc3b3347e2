"""Batch command-line front door with stable exit codes for CI use.

Exit codes: 0 success (witness found / witness valid / verification clean),
1 negative outcome (proven exhausted, invalid witness, counterexamples),
2 input or usage error, 3 search ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructions import (
    complete,
    complete_bipartite,
    cycle_graph,
    extremal_family,
    l_graph,
    petersen,
)
from .cycles import check_witness, find_cycle_mod, format_witness, parse_witness
from .errors import CeilingExceeded, CycleModError, FormatError
from .extremal import (
    c_constant_table,
    scan_l123_classification,
    verify_dean_corpus,
    verify_extremal_uniqueness_n10,
    verify_main_theorem,
    verify_tightness,
)
from .graph import Graph
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CEILING = 3


def _env_ceiling(default: int) -> int:
    raw = os.environ.get("CYCLEMOD_CEILING")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _read_source(path: str | None, inline_g6: str | None) -> str:
    if (path is None) == (inline_g6 is None):
        raise FormatError("exactly one input source required (path or --g6)")
    if inline_g6 is not None:
        return inline_g6
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _parse_graphs(text: str, fmt: str) -> list[Graph]:
    """Parse one edge-list graph or one-or-more graph6 lines."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty input", 0)
    if fmt == "auto":
        head = stripped.lstrip("#").strip()
        fmt = "edgelist" if head and head[0].isdigit() else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in stripped.splitlines() if line.strip()]


def _cmd_detect(args: argparse.Namespace) -> int:
    try:
        graphs = _parse_graphs(_read_source(args.input, args.g6), args.format)
    except (CycleModError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    all_found = True
    for g in graphs:
        witness = find_cycle_mod(g, (args.ell, args.k))
        if witness is None:
            print("exhausted")
            all_found = False
        else:
            print(format_witness(witness))
    return EXIT_OK if all_found else EXIT_NEGATIVE


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        graphs = _parse_graphs(_read_source(args.input, args.g6), args.format)
        witness = parse_witness(args.witness)
    except (CycleModError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    if len(graphs) != 1:
        print("error: check takes exactly one graph", file=sys.stderr)
        return EXIT_INPUT
    if check_witness(graphs[0], witness):
        print("valid")
        return EXIT_OK
    print("invalid")
    return EXIT_NEGATIVE


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.name == "petersen":
            g = petersen()
        elif args.name == "gn":
            g, _ = extremal_family(args.n)
        elif args.name == "l":
            g = l_graph(args.which)
        elif args.name == "complete":
            g = complete(args.n)
        elif args.name == "bipartite":
            g = complete_bipartite(args.a, args.b)
        elif args.name == "cycle":
            g = cycle_graph(args.n)
        else:
            print(f"error: unknown construction {args.name!r}", file=sys.stderr)
            return EXIT_INPUT
    except (CycleModError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(emit_edge_list(g) if args.edgelist else emit_graph6(g) + "\n")
    return EXIT_OK


def _emit_report(report, records: bool) -> None:
    if records:
        print(json.dumps(report.to_record(), sort_keys=True))
    else:
        print(report.to_text())


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.what == "main":
            report = verify_main_theorem(
                args.n, jobs=args.jobs, ceiling=_env_ceiling(8)
            )
        elif args.what == "tightness":
            report = verify_tightness(args.n, jobs=args.jobs)
        elif args.what == "uniqueness10":
            report = verify_extremal_uniqueness_n10()
        elif args.what == "dean":
            report = verify_dean_corpus(
                args.max_n, ceiling=_env_ceiling(10)
            )
        elif args.what == "l123":
            report = scan_l123_classification(
                args.max_n, ceiling=_env_ceiling(10)
            )
        elif args.what == "table1":
            return _verify_table(args)
        else:
            print(f"error: unknown verification {args.what!r}", file=sys.stderr)
            return EXIT_INPUT
    except CeilingExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CEILING
    _emit_report(report, args.records)
    clean = report.complete and not report.counterexamples
    return EXIT_OK if clean else EXIT_NEGATIVE


def _verify_table(args: argparse.Namespace) -> int:
    rows = c_constant_table()
    ok = all(row.ok for row in rows if row.checked)
    for row in rows:
        if args.records:
            print(
                json.dumps(
                    {
                        "ell": row.ell,
                        "k": row.k,
                        "c": str(row.c),
                        "family": row.family,
                        "checked": row.checked,
                        "ok": row.ok,
                        "detail": row.detail,
                    },
                    sort_keys=True,
                )
            )
        else:
            status = "ok" if row.ok else ("unchecked" if not row.checked else "FAIL")
            print(f"c_{{{row.ell},{row.k}}} = {row.c}  [{status}]  {row.detail}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclemod",
        description="Detect, certify and exhaustively verify cycles of "
        "prescribed length modulo k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="graph file or - for stdin")
        p.add_argument("--g6", help="inline graph6 string")
        p.add_argument(
            "--format",
            choices=("auto", "graph6", "edgelist"),
            default="auto",
        )

    p = sub.add_parser("detect", help="find a cycle of length ell mod k")
    add_input(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("check", help="validate a witness line against a graph")
    add_input(p)
    p.add_argument("--witness", required=True, help='e.g. "cycle k=3 ell=1 v=0,1,2,3"')
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="emit a named construction as graph6")
    p.add_argument(
        "name",
        choices=("petersen", "gn", "l", "complete", "bipartite", "cycle"),
    )
    p.add_argument("--n", type=int, default=10, help="order for gn/complete/cycle")
    p.add_argument("--which", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--edgelist", action="store_true", help="emit edge list instead")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run an exhaustive verification")
    p.add_argument(
        "what",
        choices=("main", "tightness", "uniqueness10", "dean", "l123", "table1"),
    )
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--records", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
