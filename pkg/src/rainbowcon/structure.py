"""Structural analyzers: bridges, bridge contraction, isometric cycles, chordality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, GraphInputError, PreconditionError
from .graph import Graph, bfs_distances, build_graph, is_connected, normalize_edge

ISO_CAP = 64
CHORDALITY_CAP = 24


@dataclass(frozen=True)
class BridgeSet:
    """Bridges of a connected graph as normalized edges in sorted order."""

    bridges: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.bridges)

    def __contains__(self, edge: tuple[int, int]) -> bool:
        return normalize_edge(*edge) in set(self.bridges)


@dataclass(frozen=True)
class ContractionMap:
    """Result of contracting every bridge of a connected graph."""

    quotient: Graph
    vertex_map: tuple[int, ...]
    bridge_list: tuple[tuple[int, int], ...]


def find_bridges(g: Graph) -> BridgeSet:
    """All bridges via one iterative DFS with low-links. O(n + m)."""
    n = g.vertex_count
    if n == 0:
        return BridgeSet(())
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    bridges: list[tuple[int, int]] = []
    timer = 0
    visited = 1
    disc[0] = 0
    stack = [0]
    while stack:
        v = stack[-1]
        row = adj[v]
        i = ptr[v]
        end = len(row)
        lv = low[v]
        pv = parent[v]
        child = -1
        while i < end:
            w = row[i]
            i += 1
            dw = disc[w]
            if dw < 0:
                child = w
                break
            if w != pv and dw < lv:
                lv = dw
        ptr[v] = i
        low[v] = lv
        if child >= 0:
            timer += 1
            visited += 1
            disc[child] = low[child] = timer
            parent[child] = v
            stack.append(child)
            continue
        stack.pop()
        if stack:
            p = stack[-1]
            if lv < low[p]:
                low[p] = lv
            if lv > disc[p]:
                bridges.append(normalize_edge(p, v))
    if visited != n:
        raise PreconditionError("graph is not connected")
    return BridgeSet(tuple(sorted(bridges)))


def find_bridges_naive(g: Graph) -> BridgeSet:
    """Bridges by deleting each edge and re-checking connectivity. Oracle-grade."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    n = g.vertex_count
    bridges = []
    for e in g.edges:
        remaining = [d for d in g.edges if d != e]
        if not is_connected(build_graph(n, remaining)):
            bridges.append(e)
    return BridgeSet(tuple(sorted(bridges)))


def contract_bridges(g: Graph) -> ContractionMap:
    """Contract every bridge; the quotient of a connected graph is bridgeless.

    Quotient vertices are the connected components of the bridge-only graph,
    labelled densely in order of their smallest original vertex.
    """
    bs = find_bridges(g)
    n = g.vertex_count
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for u, v in bs.bridges:
        ru, rv = find(u), find(v)
        if ru != rv:
            uf[max(ru, rv)] = min(ru, rv)
    label: dict[int, int] = {}
    vmap = [0] * n
    for v in range(n):
        r = find(v)
        if r not in label:
            label[r] = len(label)
        vmap[v] = label[r]
    bridge_set = set(bs.bridges)
    qedges = {
        normalize_edge(vmap[u], vmap[v])
        for u, v in g.edges
        if (u, v) not in bridge_set
    }
    quotient = build_graph(len(label) if n else 0, sorted(qedges))
    return ContractionMap(quotient, tuple(vmap), bs.bridges)


def shortest_cycle_through(g: Graph, u: int, v: int) -> list[int] | None:
    """A shortest cycle containing edge (u, v), or None if (u, v) is a bridge.

    Returned as a vertex list starting at u and ending at v, the closing edge
    being (v, u) itself. Length = 1 + d(u, v) in g minus that edge.
    """
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not an edge")
    n = g.vertex_count
    dist = [-1] * n
    par = [-1] * n
    dist[u] = 0
    q = deque([u])
    adj = g.adjacency
    while q:
        x = q.popleft()
        if x == v:
            break
        for y in adj[x]:
            if dist[y] < 0 and not (x == u and y == v):
                dist[y] = dist[x] + 1
                par[y] = x
                q.append(y)
    if dist[v] < 0:
        return None
    path = [v]
    while path[-1] != u:
        path.append(par[path[-1]])
    path.reverse()
    return path


def is_isometric_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff the cycle preserves all pairwise graph distances."""
    L = len(cycle)
    if L < 3 or len(set(cycle)) != L:
        raise GraphInputError("not a cycle: need at least 3 distinct vertices")
    for i in range(L):
        if not g.has_edge(cycle[i], cycle[(i + 1) % L]):
            raise GraphInputError(f"not a cycle: missing edge ({cycle[i]}, {cycle[(i + 1) % L]})")
    for i in range(L):
        dist = bfs_distances(g, cycle[i]).dist
        for j in range(i + 1, L):
            s = j - i
            if dist[cycle[j]] != min(s, L - s):
                return False
    return True


def _all_pairs(g: Graph) -> list[tuple[int, ...]]:
    return [bfs_distances(g, v).dist for v in range(g.vertex_count)]


def _has_isometric_cycle(g: Graph, dist: list[tuple[int, ...]], length: int) -> bool:
    """Search for an isometric cycle of exactly `length` vertices.

    Extends vertex sequences anchored at their minimal vertex; every prefix
    must already realize the cycle's distance pattern, which prunes hard.
    """
    adj = g.adjacency
    L = length

    def extend(path: list[int]) -> bool:
        j = len(path)
        if j == L:
            return True
        v0 = path[0]
        for w in adj[path[-1]]:
            if w <= v0:
                continue
            dw = dist[w]
            ok = True
            for i in range(j - 1):
                s = j - i
                if dw[path[i]] != (s if s + s <= L else L - s):
                    ok = False
                    break
            if ok:
                path.append(w)
                if extend(path):
                    return True
                path.pop()
        return False

    for v0 in range(g.vertex_count):
        if extend([v0]):
            return True
    return False


def largest_isometric_cycle(g: Graph, cap: int = ISO_CAP) -> int:
    """Size of the largest cycle whose internal distances match the graph's.

    Exact for n <= cap. Candidates come from a shortest cycle through every
    edge (always isometric); a descending-length search then rules out
    anything larger, up to the 2*diameter + 1 ceiling.
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if g.edge_count == 0:
        raise PreconditionError("graph has no cycles")
    if g.vertex_count > cap:
        raise CapExceededError(
            f"n={g.vertex_count} exceeds cap {cap}; use the pessimistic bound 2r+1 instead"
        )
    best = 0
    for u, v in g.edges:
        cyc = shortest_cycle_through(g, u, v)
        if cyc is None:
            raise PreconditionError(f"graph has a bridge ({u}, {v}); no cycle through a bridge")
        if len(cyc) > best:
            best = len(cyc)
    dist = _all_pairs(g)
    diameter = max(max(row) for row in dist)
    upper = min(2 * diameter + 1, g.vertex_count)
    for length in range(upper, best, -1):
        if _has_isometric_cycle(g, dist, length):
            return length
    return best


def chordality(g: Graph, cap: int = CHORDALITY_CAP) -> int:
    """Size of the largest induced (chordless) cycle; 0 if the graph is acyclic.

    Exhaustive search over chordless paths, exponential in the worst case,
    hence the small default cap.
    """
    n = g.vertex_count
    if n > cap:
        raise CapExceededError(f"n={n} exceeds cap {cap}")
    adjset = [set(row) for row in g.adjacency]
    best = 0

    def extend(path: list[int]) -> None:
        nonlocal best
        v0 = path[0]
        last = path[-1]
        interior = path[1:-1]
        for w in adjset[last]:
            if w <= v0 or w in path:
                continue
            if any(w in adjset[x] for x in interior):
                continue
            if v0 in adjset[w]:
                if len(path) >= 2 and path[1] < w and len(path) + 1 > best:
                    best = len(path) + 1
            else:
                path.append(w)
                extend(path)
                path.pop()

    for v0 in range(n):
        for v1 in g.adjacency[v0]:
            if v1 > v0:
                extend([v0, v1])
    return best
