"""Exact rainbow connection number for small graphs.

Enumeration is canonical: colour classes are labelled by first occurrence
over the sorted edge list (restricted growth strings), so each set
partition of the edges is tested once instead of k! times.  A naive
enumerator without the symmetry reduction serves as the oracle's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import CapExceededError, InternalInvariantError, PreconditionError
from .graph import Graph, is_connected, radius_diameter_center
from .structure import find_bridges
from .verify import EdgeColouring

MAX_EXACT_EDGES = 16
MAX_NAIVE_EDGES = 8


@dataclass(frozen=True)
class ExactResult:
    rc: int
    witness: EdgeColouring
    lower_bound_used: int
    colourings_tested: int


def rc_lower_bound(g: Graph) -> int:
    """max(diameter, bridge count), and at least 1 once there is an edge."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if g.vertex_count == 0:
        return 0
    _, diameter, _ = radius_diameter_center(g)
    bound = max(diameter, find_bridges(g).count)
    if g.edge_count >= 1 and bound < 1:
        bound = 1
    return bound


def _indexed_adjacency(g: Graph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for ei, (u, v) in enumerate(g.edges):
        adj[u].append((v, ei))
        adj[v].append((u, ei))
    return adj


def _rainbow_reached(
    adj: list[list[tuple[int, int]]], n: int, colours: tuple[int, ...], source: int
) -> list[bool]:
    """Rainbow reachability from one source under an edge-index colouring."""
    seen: list[list[int]] = [[] for _ in range(n)]
    reached = [False] * n
    reached[source] = True
    seen[source].append(0)
    frontier = [(source, 0)]
    while frontier:
        nxt: list[tuple[int, int]] = []
        for v, used in frontier:
            for w, ei in adj[v]:
                bit = 1 << colours[ei]
                if used & bit:
                    continue
                mask = used | bit
                masks = seen[w]
                dominated = False
                for q in masks:
                    if q & mask == q:
                        dominated = True
                        break
                if dominated:
                    continue
                seen[w] = [q for q in masks if q & mask != mask]
                seen[w].append(mask)
                reached[w] = True
                nxt.append((w, mask))
        frontier = nxt
    return reached


def _first_failure(
    adj: list[list[tuple[int, int]]], n: int, colours: tuple[int, ...]
) -> tuple[int, int] | None:
    for u in range(n - 1):
        reached = _rainbow_reached(adj, n, colours, u)
        for v in range(u + 1, n):
            if not reached[v]:
                return (u, v)
    return None


def _growth_strings(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """All length-m restricted growth strings using exactly k classes."""
    if k < 1 or k > m:
        return
    word = [0] * m

    def extend(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            if top == k - 1:
                yield tuple(word)
            return
        if (k - 1) - top > m - i:
            return
        hi = top + 1 if top + 1 < k else k - 1
        for c in range(hi + 1):
            word[i] = c
            yield from extend(i + 1, top if c <= top else c)

    yield from extend(0, -1)


def _search(
    g: Graph, candidate_sets: Iterator[tuple[int, Iterator[tuple[int, ...]]]], lb: int
) -> ExactResult:
    n = g.vertex_count
    adj = _indexed_adjacency(g)
    tested = 0
    last_fail: tuple[int, int] | None = None
    for k, candidates in candidate_sets:
        for cand in candidates:
            tested += 1
            if last_fail is not None:
                u, v = last_fail
                if not _rainbow_reached(adj, n, cand, u)[v]:
                    continue
            fail = _first_failure(adj, n, cand)
            if fail is None:
                witness = EdgeColouring({e: cand[i] for i, e in enumerate(g.edges)})
                return ExactResult(k, witness, lb, tested)
            last_fail = fail
    raise PreconditionError(
        f"no rainbow colouring found within the colour budget (tested {tested})"
    )


def exact_rc(g: Graph, max_colours: int | None = None, *, max_edges: int = MAX_EXACT_EDGES) -> ExactResult:
    """Minimum palette size, certified by exhausting all smaller palettes.

    Starts at rc_lower_bound and enumerates canonically, so the first hit
    is minimal.  Raises CapExceededError above ``max_edges`` edges and
    PreconditionError when ``max_colours`` is exhausted (impossible once
    max_colours reaches the edge count).
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    m = g.edge_count
    if m > max_edges:
        raise CapExceededError(
            f"graph has {m} edges, above the certification cap {max_edges}; "
            "pass max_edges explicitly to override"
        )
    lb = rc_lower_bound(g)
    if m == 0:
        return ExactResult(0, EdgeColouring({}), lb, 0)
    hi = m if max_colours is None else min(max_colours, m)
    sets = ((k, _growth_strings(m, k)) for k in range(max(lb, 1), hi + 1))
    return _search(g, sets, lb)


def exact_rc_naive(g: Graph) -> ExactResult:
    """Same value as exact_rc but over all k^m colourings, no canonicity."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    m = g.edge_count
    if m > MAX_NAIVE_EDGES:
        raise CapExceededError(f"graph has {m} edges, above the naive cap {MAX_NAIVE_EDGES}")
    lb = rc_lower_bound(g)
    if m == 0:
        return ExactResult(0, EdgeColouring({}), lb, 0)
    sets = ((k, product(range(k), repeat=m)) for k in range(max(lb, 1), m + 1))
    try:
        return _search(g, sets, lb)
    except PreconditionError:
        raise InternalInvariantError(
            "all-distinct colouring rejected; the checker is broken"
        ) from None
