"""Immutable simple undirected graphs and BFS-based metric queries."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphInputError, PreconditionError

UNREACHABLE = -1


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Return the edge as an ordered (low, high) pair."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on dense vertex ids 0..n-1.

    Edges are normalized (u < v) and sorted; adjacency lists are sorted.
    Self-loops are rejected and parallel edges collapsed at build time.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v


@dataclass(frozen=True)
class DistanceVector:
    """BFS distances from one source; UNREACHABLE marks disconnected vertices."""

    source: int
    dist: tuple[int, ...]


def build_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate, deduplicate and normalize an edge list into a Graph.

    Raises GraphInputError with the offending list index for out-of-range
    endpoints or self-loops.
    """
    if vertex_count < 0:
        raise GraphInputError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    for i, (u, v) in enumerate(edge_list):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphInputError(f"edge {i}: endpoint out of range for n={vertex_count}: ({u}, {v})")
        if u == v:
            raise GraphInputError(f"edge {i}: self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(vertex_count, edges, tuple(tuple(sorted(row)) for row in adj))


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    """Single-source BFS distances."""
    n = g.vertex_count
    if not 0 <= source < n:
        raise GraphInputError(f"source {source} out of range for n={n}")
    dist = [UNREACHABLE] * n
    dist[source] = 0
    q = deque([source])
    adj = g.adjacency
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                q.append(v)
    return DistanceVector(source, tuple(dist))


def distances_to_set(g: Graph, sources: Iterable[int]) -> list[int]:
    """Multi-source BFS: distance from every vertex to the nearest source."""
    n = g.vertex_count
    dist = [UNREACHABLE] * n
    q = deque()
    for s in sources:
        if not 0 <= s < n:
            raise GraphInputError(f"source {s} out of range for n={n}")
        if dist[s] != 0:
            dist[s] = 0
            q.append(s)
    adj = g.adjacency
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                q.append(v)
    return dist


def eccentricity(g: Graph, v: int) -> int:
    """Greatest BFS distance from v; raises on disconnected input."""
    dist = bfs_distances(g, v).dist
    ecc = max(dist)
    if UNREACHABLE in dist:
        raise PreconditionError("graph is not connected")
    return ecc


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex via n BFS runs; connected input required."""
    if g.vertex_count == 0:
        raise PreconditionError("graph has no vertices")
    return [eccentricity(g, v) for v in range(g.vertex_count)]


def radius_diameter_center(g: Graph) -> tuple[int, int, int]:
    """Radius, diameter and the lowest-id vertex achieving the radius."""
    eccs = eccentricities(g)
    r = min(eccs)
    return r, max(eccs), eccs.index(r)


def is_connected(g: Graph) -> bool:
    """True for the empty graph and for any graph one BFS covers fully."""
    n = g.vertex_count
    if n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0).dist


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by a vertex set, plus the old-id -> new-id mapping."""
    keep = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(keep)}
    kept = set(keep)
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in kept and v in kept]
    return build_graph(len(keep), edges), relabel
