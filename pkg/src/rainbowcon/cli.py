"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition failure (for example bridged input to a bridgeless-only
mode).  Every error goes to standard error as ``error[<kind>]: message``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import format_csv, run_bench
from .errors import (
    CapExceededError,
    GraphInputError,
    ParseError,
    PartialColouringError,
    PreconditionError,
)
from .exact import MAX_EXACT_EDGES, exact_rc
from .formats import (
    parse_edge_list,
    read_colouring_file,
    read_edge_list_file,
    write_colouring,
    write_edge_list,
)
from .generators import FamilySpec
from .graph import Graph, radius_diameter_center
from .pipelines import (
    MODE_DIAMETER,
    MODE_RADIUS,
    colour_bridgeless_diameter,
    colour_bridgeless_radius,
    colour_general,
)
from .structure import chordality, find_bridges, largest_isometric_cycle
from .verify import verify_rainbow_connected

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

AUTO_RADIUS_LIMIT = 10**4


def _load_graph(path: str) -> Graph:
    g, duplicates = read_edge_list_file(path)
    if duplicates:
        print(f"warning: {duplicates} duplicate edge(s) ignored in {path}", file=sys.stderr)
    return g


def _cmd_gen(args: argparse.Namespace) -> int:
    tokens = [args.family] + list(args.params)
    if args.seed is not None:
        tokens.append(f"seed={args.seed}")
    g = FamilySpec.parse(" ".join(tokens)).build()
    text = write_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    r, d, _ = radius_diameter_center(g)
    stats: dict[str, int] = {
        "n": g.vertex_count,
        "m": g.edge_count,
        "r": r,
        "d": d,
        "b": find_bridges(g).count,
    }
    if args.iso:
        stats["zeta"] = largest_isometric_cycle(g)
    if args.chordality:
        stats["chordality"] = chordality(g)
    if args.json:
        print(json.dumps(stats))
    else:
        for key, value in stats.items():
            print(f"{key} {value}")
    return EXIT_OK


def _resolve_mode(requested: str, g: Graph) -> str:
    if requested != "auto":
        return requested
    return MODE_RADIUS if g.vertex_count <= AUTO_RADIUS_LIMIT else MODE_DIAMETER


def _cmd_colour(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    mode = _resolve_mode(args.mode, g)
    if args.general:
        colouring, report = colour_general(g, mode, verify=args.verify)
    elif mode == MODE_RADIUS:
        colouring, report = colour_bridgeless_radius(g, verify=args.verify)
    else:
        colouring, report = colour_bridgeless_diameter(g, verify=args.verify)
    Path(args.out).write_text(write_colouring(colouring))
    payload = report.to_json_dict()
    payload["requested_mode"] = args.mode
    print(json.dumps(payload))
    if args.verify and report.verified is False:
        print("error[verify]: produced colouring failed verification", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    colouring = read_colouring_file(args.colouring)
    result = verify_rainbow_connected(g, colouring)
    if result.rainbow_connected:
        print("RAINBOW CONNECTED")
        return EXIT_OK
    u, v = result.witness_failure
    print("NOT RAINBOW CONNECTED")
    print(f"witness {u} {v}")
    return EXIT_VERIFY_FAILED


def _cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    result = exact_rc(g, args.max_colours, max_edges=args.max_edges)
    print(result.rc)
    if args.out:
        Path(args.out).write_text(write_colouring(result.witness))
    return EXIT_OK


def _bench_entries(corpus: str) -> list[tuple[str, Graph]]:
    path = Path(corpus)
    entries: list[tuple[str, Graph]] = []
    if path.is_dir():
        for child in sorted(path.glob("*.edges")):
            g, duplicates = parse_edge_list(child.read_text())
            if duplicates:
                print(f"warning: {duplicates} duplicate edge(s) ignored in {child}", file=sys.stderr)
            entries.append((child.stem, g))
    else:
        for raw in path.read_text().splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            spec = FamilySpec.parse(line)
            entries.append((spec.graph_id(), spec.build()))
    if not entries:
        raise GraphInputError(f"no graphs found in corpus {corpus}")
    return entries


def _cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(_bench_entries(args.corpus))
    Path(args.out).write_text(format_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcon",
        description="Rainbow connection colouring with verified palette bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family as an edge list")
    p_gen.add_argument("family", help="family tag, e.g. cycle-chain, thick-path, cycle")
    p_gen.add_argument("params", nargs="*", help="family parameters as name=value")
    p_gen.add_argument("--seed", type=int, default=None, help="seed for random families")
    p_gen.add_argument("--out", help="output path (default: stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_stats = sub.add_parser("stats", help="structural statistics of a graph")
    p_stats.add_argument("graph", help="edge list file")
    p_stats.add_argument("--iso", action="store_true", help="compute the largest isometric cycle")
    p_stats.add_argument("--chordality", action="store_true", help="compute the chordality")
    p_stats.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p_stats.set_defaults(func=_cmd_stats)

    p_colour = sub.add_parser("colour", help="colour a graph and report the palette")
    p_colour.add_argument("graph", help="edge list file")
    p_colour.add_argument("--mode", choices=["radius", "diameter", "auto"], default="auto")
    p_colour.add_argument("--general", action="store_true", help="allow bridges (contract first)")
    p_colour.add_argument("--verify", action="store_true", help="verify the result before reporting")
    p_colour.add_argument("--out", required=True, help="colouring output path")
    p_colour.set_defaults(func=_cmd_colour)

    p_verify = sub.add_parser("verify", help="check a colouring file against a graph")
    p_verify.add_argument("graph", help="edge list file")
    p_verify.add_argument("colouring", help="colouring file")
    p_verify.set_defaults(func=_cmd_verify)

    p_exact = sub.add_parser("exact", help="exact rainbow connection number (small graphs)")
    p_exact.add_argument("graph", help="edge list file")
    p_exact.add_argument("--max-edges", type=int, default=MAX_EXACT_EDGES)
    p_exact.add_argument("--max-colours", type=int, default=None)
    p_exact.add_argument("--out", help="write the witness colouring here")
    p_exact.set_defaults(func=_cmd_exact)

    p_bench = sub.add_parser("bench", help="benchmark both modes over a corpus")
    p_bench.add_argument("corpus", help="directory of .edges files, or a family-spec file")
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error[parse]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphInputError as exc:
        print(f"error[input]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error[cap]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PartialColouringError as exc:
        print(f"error[colouring]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
