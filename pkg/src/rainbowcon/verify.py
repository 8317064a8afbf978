"""Exact verification that an edge colouring makes a graph rainbow connected.

A graph is rainbow connected under a colouring when every pair of vertices
is joined by at least one path whose edges all carry distinct colours.  The
checker here is exact and independent of how the colouring was produced, so
it can act as a certificate for any construction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import CapExceededError, PartialColouringError, PreconditionError
from .graph import Graph, is_connected, normalize_edge

DEFAULT_COLOUR_CAP = 62

_ENV_CAP = "RAINBOW_MAX_VERIFY_COLOURS"


def _colour_cap() -> int:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return DEFAULT_COLOUR_CAP
    try:
        value = int(raw)
    except ValueError:
        raise PreconditionError(f"{_ENV_CAP} must be an integer, got {raw!r}")
    if value < 1:
        raise PreconditionError(f"{_ENV_CAP} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class EdgeColouring:
    """Assignment of a colour id to every edge of a host graph.

    Keys of ``colour_of`` are normalized edge pairs ``(u, v)`` with ``u < v``.
    Colour ids are arbitrary non-negative integers; they need not be dense.
    """

    colour_of: dict[tuple[int, int], int]

    @property
    def palette_size(self) -> int:
        """Number of distinct colours actually used."""
        return len(set(self.colour_of.values()))

    def colour(self, u: int, v: int) -> int:
        return self.colour_of[normalize_edge(u, v)]

    def validate_for(self, g: Graph) -> None:
        """Check the colouring covers exactly the edges of ``g``.

        Raises PartialColouringError naming one offending edge otherwise.
        """
        for e in g.edges:
            if e not in self.colour_of:
                raise PartialColouringError(f"edge {e} has no colour")
        if len(self.colour_of) != g.edge_count:
            for e in self.colour_of:
                if not g.has_edge(*e):
                    raise PartialColouringError(f"coloured edge {e} is not in the graph")
        for e, c in self.colour_of.items():
            if c < 0:
                raise PartialColouringError(f"edge {e} has negative colour {c}")

    def normalized(self) -> "EdgeColouring":
        """Relabel colours to 0..k-1 by first occurrence over sorted edges."""
        relabel: dict[int, int] = {}
        out: dict[tuple[int, int], int] = {}
        for e in sorted(self.colour_of):
            c = self.colour_of[e]
            if c not in relabel:
                relabel[c] = len(relabel)
            out[e] = relabel[c]
        return EdgeColouring(out)


@dataclass(frozen=True)
class VerificationResult:
    rainbow_connected: bool
    witness_failure: tuple[int, int] | None
    pairs_checked: int


def _compact(g: Graph, colouring: EdgeColouring) -> tuple[list[list[tuple[int, int]]], int]:
    """Adjacency annotated with colour bitmasks, colours packed to low bits."""
    ids = sorted(set(colouring.colour_of.values()))
    dense = {c: i for i, c in enumerate(ids)}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for (u, v), c in colouring.colour_of.items():
        bit = 1 << dense[c]
        adj[u].append((v, bit))
        adj[v].append((u, bit))
    return adj, len(ids)


def _rainbow_reach(adj: list[list[tuple[int, int]]], n: int, source: int) -> list[bool]:
    """Vertices reachable from ``source`` along some rainbow path.

    State space is (vertex, set of colours used so far).  A state is pruned
    when the same vertex was already reached with a subset of its colours,
    so each vertex keeps an antichain of colour sets.
    """
    seen: list[list[int]] = [[] for _ in range(n)]
    reached = [False] * n
    reached[source] = True
    seen[source].append(0)
    frontier = [(source, 0)]
    while frontier:
        nxt: list[tuple[int, int]] = []
        for v, used in frontier:
            for w, bit in adj[v]:
                if used & bit:
                    continue
                mask = used | bit
                masks = seen[w]
                skip = False
                for m in masks:
                    if m & mask == m:
                        skip = True
                        break
                if skip:
                    continue
                seen[w] = [m for m in masks if m & mask != mask]
                seen[w].append(mask)
                reached[w] = True
                nxt.append((w, mask))
        frontier = nxt
    return reached


def rainbow_path_exists(g: Graph, colouring: EdgeColouring, u: int, v: int) -> bool:
    """Exact test for one pair: is there a u-v path with all-distinct colours?"""
    if not 0 <= u < g.vertex_count or not 0 <= v < g.vertex_count:
        raise PreconditionError(f"vertex pair ({u}, {v}) out of range")
    colouring.validate_for(g)
    if u == v:
        return True
    if g.has_edge(u, v):
        return True
    if colouring.palette_size > _colour_cap():
        raise CapExceededError(
            f"palette has {colouring.palette_size} colours, above the bitmask cap "
            f"{_colour_cap()}; raise {_ENV_CAP} or fall back to path enumeration"
        )
    adj, _ = _compact(g, colouring)
    return _rainbow_reach(adj, g.vertex_count, u)[v]


def verify_rainbow_connected(g: Graph, colouring: EdgeColouring) -> VerificationResult:
    """Check every vertex pair; report the lexicographically least failure.

    Runs one rainbow-reachability search per source vertex in ascending
    order, so the first failing pair found is the least one.
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    colouring.validate_for(g)
    n = g.vertex_count
    if n <= 1:
        return VerificationResult(True, None, 0)
    if colouring.palette_size > _colour_cap():
        raise CapExceededError(
            f"palette has {colouring.palette_size} colours, above the bitmask cap "
            f"{_colour_cap()}; raise {_ENV_CAP} or fall back to path enumeration"
        )
    adj, _ = _compact(g, colouring)
    pairs = 0
    for u in range(n - 1):
        reached = _rainbow_reach(adj, n, u)
        for v in range(u + 1, n):
            pairs += 1
            if not reached[v]:
                return VerificationResult(False, (u, v), pairs)
    return VerificationResult(True, None, pairs)
