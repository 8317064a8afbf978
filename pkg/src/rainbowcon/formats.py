"""Plain-text graph and colouring files.

Edge lists: a header line ``n m``, then one ``u v`` line per edge.  Lines
starting with ``#`` and blank lines are ignored.  Colouring files carry
``u v c`` triples.  The writers emit canonical form (sorted edges, single
spaces, trailing newline) so write(parse(text)) is byte-identical for
canonical input.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph, build_graph
from .verify import EdgeColouring


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[Graph, int]:
    """Parse an edge list; returns the graph and the duplicate-edge count.

    The declared edge count must match the number of edge lines read,
    duplicates included; duplicates are dropped from the graph and only
    counted so callers can warn about them.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: header values must be integers") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: header values must be non-negative")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edge_lines += 1
        e = (u, v) if u < v else (v, u)
        if e in seen:
            duplicates += 1
        else:
            seen.add(e)
            edges.append(e)
    if header is None:
        raise ParseError("missing header line 'n m'")
    if edge_lines != header[1]:
        raise ParseError(f"header declares m={header[1]} but found {edge_lines} edge lines")
    return build_graph(header[0], edges), duplicates


def write_colouring(colouring: EdgeColouring) -> str:
    items = sorted(colouring.colour_of.items())
    if not items:
        return ""
    return "\n".join(f"{u} {v} {c}" for (u, v), c in items) + "\n"


def parse_colouring(text: str) -> EdgeColouring:
    out: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'u v c', got {line!r}")
        try:
            u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: values must be integers") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if c < 0:
            raise ParseError(f"line {lineno}: colour must be non-negative, got {c}")
        e = (u, v) if u < v else (v, u)
        if e in out:
            raise ParseError(f"line {lineno}: duplicate edge {e}")
        out[e] = c
    return EdgeColouring(out)


def read_edge_list_file(path: "str | Path") -> tuple[Graph, int]:
    return parse_edge_list(Path(path).read_text())


def write_edge_list_file(g: Graph, path: "str | Path") -> None:
    Path(path).write_text(write_edge_list(g))


def read_colouring_file(path: "str | Path") -> EdgeColouring:
    return parse_colouring(Path(path).read_text())


def write_colouring_file(colouring: EdgeColouring, path: "str | Path") -> None:
    Path(path).write_text(write_colouring(colouring))
