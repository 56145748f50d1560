"""Command-line surface: ingest graphs, compute curvature, audit claims.

    gammacone curvature INPUT [--at all|V] [--n inf|N]
    gammacone cric INPUT [--n inf|N]
    gammacone audit [INPUT ...] [--family F --max-n K] [--seed S]
    gammacone generate --family F --n K [--format el|g6]

INPUT is an .el edge-list file, a .g6 graph6 file (one graph per line),
or "-" for standard input (format sniffed: an "n <count>" header means
edge list).  Reports are newline-delimited JSON.  Exit codes: 0 all
checks passed, 1 at least one check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys

from .audit import (
    cric_report,
    curvature_report,
    render_json,
    report_failed,
    run_audit,
)
from .curvature import DimensionParam
from .enumeration import connected_graphs
from .errors import EmptyGraphError, GraphFormatError
from .graphs import Graph, make_complete, make_cycle, make_hypercube, make_path
from .io import format_edge_list, format_graph6, parse_edge_list, parse_graph6

_FAMILY_MAKERS = {
    "complete": (make_complete, 1),
    "cycle": (make_cycle, 3),
    "path": (make_path, 2),
    "hypercube": (make_hypercube, 1),
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        return s.startswith("n ") or s == "n"
    return False


def read_graphs(path: str) -> list[tuple[str, Graph]]:
    """Load one or more graphs from a file or stdin."""
    text = _read_text(path)
    name = "stdin" if path == "-" else path
    if path.endswith(".el") or (path == "-" and _looks_like_edge_list(text)):
        return [(name, parse_edge_list(text))]
    if path.endswith(".g6") or path == "-":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError(f"{name}: no graph6 lines found")
        if len(lines) == 1:
            return [(name, parse_graph6(lines[0]))]
        return [(f"{name}:{i}", parse_graph6(ln)) for i, ln in enumerate(lines)]
    raise GraphFormatError(
        f"{name}: cannot detect format (expected a .el or .g6 extension, or '-')"
    )


def _read_single(path: str) -> tuple[str, Graph]:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise GraphFormatError(
            f"{path}: expected exactly one graph, found {len(graphs)}"
        )
    return graphs[0]


def family_members(family: str, max_n: int) -> list[tuple[str, Graph]]:
    """Audit corpus for a named family, parameters 1..max_n."""
    if max_n < 1:
        raise ValueError("--max-n must be at least 1")
    out: list[tuple[str, Graph]] = []
    if family == "all-connected":
        if max_n > 8:
            raise ValueError("all-connected enumeration is capped at --max-n 8")
        for n in range(1, max_n + 1):
            for i, g in enumerate(connected_graphs(n)):
                out.append((f"connected-{n}-{i:05d}", g))
        return out
    if family not in _FAMILY_MAKERS:
        raise ValueError(f"unknown family {family!r}")
    if family == "hypercube" and max_n > 6:
        raise ValueError("hypercube family is capped at --max-n 6")
    if max_n > 62:
        raise ValueError("family sizes are capped at 62")
    maker, low = _FAMILY_MAKERS[family]
    low = max(low, 2) if family == "complete" else low
    for k in range(low, max_n + 1):
        out.append((f"{family}-{k}", maker(k)))
    if not out:
        raise ValueError(f"--max-n {max_n} is below the smallest {family} graph")
    return out


def _cmd_curvature(args) -> int:
    npar = DimensionParam.parse(args.n)
    gid, g = _read_single(args.input)
    at = "all" if args.at == "all" else int(args.at)
    report = curvature_report(gid, g, npar, at, seed=args.seed)
    print(render_json(report))
    return 1 if report_failed(report) else 0


def _cmd_cric(args) -> int:
    npar = DimensionParam.parse(args.n)
    gid, g = _read_single(args.input)
    report = cric_report(gid, g, npar, seed=args.seed)
    print(render_json(report))
    return 1 if report_failed(report) else 0


def _cmd_audit(args) -> int:
    if args.family and args.inputs:
        raise ValueError("give either input files or --family, not both")
    if args.family:
        items = family_members(args.family, args.max_n)
    elif args.inputs:
        items = []
        for path in args.inputs:
            items.extend(read_graphs(path))
    else:
        raise ValueError("audit needs input files or --family")
    failed = False
    for report in run_audit(items, args.seed):
        print(render_json(report))
        failed = failed or report_failed(report)
    return 1 if failed else 0


def _cmd_generate(args) -> int:
    if args.family not in _FAMILY_MAKERS:
        raise ValueError(f"unknown family {args.family!r}")
    maker, _ = _FAMILY_MAKERS[args.family]
    g = maker(args.n)
    if args.format == "el":
        sys.stdout.write(format_edge_list(g))
    else:
        sys.stdout.write(format_graph6(g) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammacone",
        description="curvature and spectral audits on finite graphs and their cones",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="pointwise and uniform curvature")
    p.add_argument("input", help=".el / .g6 file or - for stdin")
    p.add_argument("--at", default="all", help="vertex id or 'all' (default)")
    p.add_argument("--n", default="inf", help="dimension parameter, a real > 1 or 'inf'")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("cric", help="conical curvature, ceiling, maximizers")
    p.add_argument("input")
    p.add_argument("--n", default="inf")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_cric)

    p = sub.add_parser("audit", help="run the full audit battery")
    p.add_argument("inputs", nargs="*", help="graph files; or use --family")
    p.add_argument("--family",
                   choices=["complete", "cycle", "path", "hypercube", "all-connected"])
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("generate", help="emit a named graph")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["el", "g6"], default="el")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (GraphFormatError, EmptyGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
