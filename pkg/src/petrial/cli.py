"""Command-line interface.

Exit codes: 0 success, 1 a checked property failed, 2 unusable input,
3 an enumeration guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .bouquet import Bouquet, boundary_cycles, intersection_graph, parse_cdf, partial_petrial, stats, trace_boundaries
from .enumeration import parse_shard
from .errors import InvalidInputError, PreconditionError, ResourceLimitError
from .graph import parse_edge_list
from .harness import SCOPES, RunReport, run_scope
from .poly import DEFAULT_MAX_N, poly_by_corank, poly_by_tracing
from .witness import WitnessCertificate, check_witness, make_witness

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

EXTENSION_NOTE = "corank-sum extension (circle-graph status of the input is not checked)"


class UsageError(Exception):
    pass


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Subcommands repeat the global flags; SUPPRESS keeps the global value
    # unless the flag is given after the subcommand.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--max-n", type=int, default=default(DEFAULT_MAX_N), help="enumeration guard")
    parser.add_argument("--shard", default=default("0/1"), help="i/k: visit every k-th generated item from i")


def _add_input(parser: argparse.ArgumentParser, graph_only: bool = False, bouquet_only: bool = False) -> None:
    parser.add_argument("file", nargs="?", help="input file (.cdf chord diagrams or .edges edge list)")
    if not graph_only:
        parser.add_argument("--word", help="inline chord-diagram line, e.g. '1 2 1 2 | 2'")
    if not bouquet_only:
        parser.add_argument("--edges", help="inline edge list; ';' separates lines, e.g. '3 2; 0 1; 1 2'")
    parser.add_argument("--input-format", choices=("auto", "cdf", "edges"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="petrial", description="Partial Petrial polynomials of bouquets and circle graphs.")
    parser.add_argument("--version", action="version", version=f"petrial {__version__}")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute the partial Petrial polynomial")
    _add_common(p, suppress=True)
    _add_input(p)
    p.add_argument("--mode", choices=("tracing", "corank", "both"), default=None,
                   help="default: both for chord diagrams, corank for graphs")

    p = sub.add_parser("genus", help="Euler characteristic and genus of a partial Petrial")
    _add_common(p, suppress=True)
    _add_input(p, bouquet_only=True)
    p.add_argument("--twist", default="", help="whitespace-separated loop labels to half-twist")

    p = sub.add_parser("trace", help="boundary components of a bouquet")
    _add_common(p, suppress=True)
    _add_input(p, bouquet_only=True)
    p.add_argument("--twist", default="", help="whitespace-separated loop labels to half-twist")

    p = sub.add_parser("witness", help="make or check witness certificates")
    _add_common(p, suppress=True)
    wsub = p.add_subparsers(dest="action", required=True)
    make = wsub.add_parser("make", help="write a certificate for a graph")
    _add_common(make, suppress=True)
    _add_input(make, graph_only=True)
    make.add_argument("--out", help="certificate path (default: stdout)")
    check = wsub.add_parser("check", help="replay a certificate")
    _add_common(check, suppress=True)
    check.add_argument("cert", help="certificate JSON file")

    p = sub.add_parser("check-theorem", help="run an exhaustive verification sweep")
    _add_common(p, suppress=True)
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("n", type=int, metavar="MAX_N", help="largest instance size")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _read_input(args, want: str):
    """Return ('bouquets', [Bouquet...]) or ('graph', SimpleGraph)."""
    word = getattr(args, "word", None)
    edges = getattr(args, "edges", None)
    given = [x for x in (word, edges, args.file) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of FILE, --word or --edges")
    if word is not None:
        return "bouquets", parse_cdf(word)
    if edges is not None:
        return "graph", parse_edge_list(edges.replace(";", "\n"))
    path = Path(args.file)
    fmt = args.input_format
    if fmt == "auto":
        suffix = path.suffix.lower()
        if suffix == ".cdf":
            fmt = "cdf"
        elif suffix in (".edges", ".el"):
            fmt = "edges"
        elif want in ("cdf", "edges"):
            fmt = want
        else:
            raise UsageError(f"cannot tell the format of {path}; pass --input-format")
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "cdf":
        bouquets = parse_cdf(text)
        if not bouquets:
            raise UsageError(f"{path} contains no chord diagrams")
        return "bouquets", bouquets
    return "graph", parse_edge_list(text)


def _single_bouquet(args) -> Bouquet:
    kind, value = _read_input(args, "cdf")
    if kind != "bouquets" or len(value) != 1:
        raise UsageError("expected exactly one chord diagram")
    b = value[0]
    return partial_petrial(b, b.ids(args.twist.split()))


def _emit(args, lines: List[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_poly(args) -> int:
    kind, value = _read_input(args, "")
    mode = args.mode
    if kind == "graph":
        mode = mode or "corank"
        if mode != "corank":
            raise UsageError("tracing needs a chord diagram; graphs support --mode corank only")
        p = poly_by_corank(value, max_n=args.max_n)
        _emit(args, [p.to_text(), f"note: {EXTENSION_NOTE}"],
              [{"input": "graph", "corank": p.to_json_obj(), "source": EXTENSION_NOTE}])
        return EXIT_OK
    mode = mode or "both"
    lines = []
    payload = []
    status = EXIT_OK
    for k, b in enumerate(value):
        item = {"input": b.to_text()}
        if len(value) > 1:
            lines.append(f"# {k + 1}: {b.to_text()}")
        results = {}
        if mode in ("tracing", "both"):
            results["tracing"] = poly_by_tracing(b, max_n=args.max_n)
        if mode in ("corank", "both"):
            results["corank"] = poly_by_corank(intersection_graph(b), max_n=args.max_n)
        if mode == "both":
            equal = results["tracing"] == results["corank"]
            lines.append(f"tracing: {results['tracing']}")
            lines.append(f"corank:  {results['corank']}")
            lines.append("EQUAL" if equal else "UNEQUAL")
            item["equal"] = equal
            if not equal:
                status = EXIT_FAILED
        else:
            lines.append(str(results[mode]))
        for name, p in results.items():
            item[name] = p.to_json_obj()
        payload.append(item)
    _emit(args, lines, payload)
    return status


def cmd_genus(args) -> int:
    b = _single_bouquet(args)
    s = stats(b)
    _emit(args, [f"v={s.v} e={s.e} f={s.f} chi={s.chi} genus={s.genus}"],
          {"input": b.to_text(), "v": s.v, "e": s.e, "f": s.f, "c": s.c, "chi": s.chi, "genus": s.genus})
    return EXIT_OK


def _point_name(x: int) -> str:
    return f"{x // 2}{'+' if x & 1 else '-'}"


def cmd_trace(args) -> int:
    b = _single_bouquet(args)
    f = trace_boundaries(b)
    cycles = [c for c in boundary_cycles(b) if c]
    lines = [f"f={f}"]
    lines += [f"boundary {i}: " + " ".join(_point_name(x) for x in c) for i, c in enumerate(cycles)]
    _emit(args, lines, {"input": b.to_text(), "f": f, "boundaries": [[_point_name(x) for x in c] for c in cycles]})
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.action == "make":
        kind, g = _read_input(args, "edges")
        if kind != "graph":
            raise UsageError("witness make needs an edge list")
        cert = make_witness(g)
        text = cert.to_json()
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        print(f"{cert.kind}: marks={sorted(cert.initial.marks)} sequence={list(cert.sequence)}", file=sys.stderr)
        return EXIT_OK
    try:
        text = Path(args.cert).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc.strerror}") from None
    cert = WitnessCertificate.from_json(text)
    report = check_witness(cert)
    _emit(args, [report.describe()], {"ok": report.ok, "coranks": report.coranks, "failure": report.failure})
    return EXIT_OK if report.ok else EXIT_FAILED


def _run_shard(job):
    scope, n, shard_, limit = job
    return run_scope(scope, n, shard_, limit)


def cmd_check_theorem(args) -> int:
    if args.n < 0:
        raise UsageError("MAX_N must be nonnegative")
    if args.n > args.max_n:
        raise ResourceLimitError(f"MAX_N = {args.n} exceeds the guard --max-n {args.max_n}")
    i, k = parse_shard(args.shard)
    jobs = max(1, args.jobs)
    if jobs == 1:
        reports = run_scope(args.scope, args.n, (i, k), args.max_n)
    else:
        work = [(args.scope, args.n, (i + k * j, k * jobs), args.max_n) for j in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_run_shard, work))
        reports = [reduce(RunReport.merge, column) for column in zip(*parts)]
    lines = []
    for r in reports:
        lines.append(r.summary())
        if r.generated:
            lines.append("  generated: " + " ".join(f"{key}={val}" for key, val in sorted(r.generated.items())))
        if r.stats:
            lines.append("  stats: " + " ".join(f"{key}={val}" for key, val in sorted(r.stats.items())))
        print(f"{r.command}: {r.elapsed:.2f}s", file=sys.stderr)
    _emit(args, lines, {"scope": args.scope, "max_n": args.n, "shard": args.shard,
                        "reports": [r.to_json_obj() for r in reports]})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


COMMANDS = {
    "poly": cmd_poly,
    "genus": cmd_genus,
    "trace": cmd_trace,
    "witness": cmd_witness,
    "check-theorem": cmd_check_theorem,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"petrial: resource limit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, InvalidInputError, PreconditionError) as exc:
        print(f"petrial: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
