"""Independent brute-force oracles used to pin expected test values.

Everything here is deliberately naive: Floyd-Warshall distances, simple
path and cycle enumeration, labelled-graph sweeps with permutation
canonicalisation.  None of it shares code with the package under test.
"""

from __future__ import annotations

from itertools import combinations, permutations

UNREACHABLE = -1


def adjacency_sets(n: int, edges: "list[tuple[int, int]]") -> "list[set[int]]":
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def floyd_warshall(n: int, edges: "list[tuple[int, int]]") -> "list[list[int]]":
    """All-pairs hop distances; UNREACHABLE for disconnected pairs."""
    inf = n + 1
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return [[d if d < inf else UNREACHABLE for d in row] for row in dist]


def simple_paths(n: int, edges: "list[tuple[int, int]]", u: int, v: int):
    """Yield every simple u-v path as a vertex tuple."""
    adj = adjacency_sets(n, edges)
    stack = [(u, (u,))]
    while stack:
        x, path = stack.pop()
        if x == v:
            yield path
            continue
        for y in sorted(adj[x]):
            if y not in path:
                stack.append((y, path + (y,)))


def rainbow_connected_oracle(
    n: int, edges: "list[tuple[int, int]]", colour_of: "dict[tuple[int, int], int]"
) -> "tuple[bool, tuple[int, int] | None]":
    """Check all pairs by full simple-path enumeration; least failing pair."""
    for u in range(n):
        for v in range(u + 1, n):
            ok = False
            for path in simple_paths(n, edges, u, v):
                word = [
                    colour_of[(a, b) if a < b else (b, a)]
                    for a, b in zip(path, path[1:])
                ]
                if len(set(word)) == len(word):
                    ok = True
                    break
            if not ok:
                return False, (u, v)
    return True, None


def all_cycles(n: int, edges: "list[tuple[int, int]]") -> "list[tuple[int, ...]]":
    """Every simple cycle, once, as a vertex tuple starting at its least vertex."""
    adj = adjacency_sets(n, edges)
    cycles: set[tuple[int, ...]] = set()
    for start in range(n):
        stack = [(start, (start,))]
        while stack:
            x, path = stack.pop()
            for y in adj[x]:
                if y == start and len(path) >= 3:
                    a, b = path[1], path[-1]
                    cycles.add(path if a < b else (start,) + path[:0:-1])
                elif y > start and y not in path:
                    stack.append((y, path + (y,)))
    return sorted(cycles, key=len)


def is_isometric_cycle_oracle(
    n: int, edges: "list[tuple[int, int]]", cycle: "tuple[int, ...]"
) -> bool:
    dist = floyd_warshall(n, edges)
    p = len(cycle)
    for i in range(p):
        for j in range(i + 1, p):
            around = min(j - i, p - (j - i))
            if around != dist[cycle[i]][cycle[j]]:
                return False
    return True


def largest_isometric_cycle_oracle(n: int, edges: "list[tuple[int, int]]") -> int:
    best = 0
    for cycle in all_cycles(n, edges):
        if is_isometric_cycle_oracle(n, edges, cycle):
            best = max(best, len(cycle))
    return best


def chordality_oracle(n: int, edges: "list[tuple[int, int]]") -> int:
    """Largest induced cycle length by checking every cycle for chords."""
    edge_set = {(u, v) if u < v else (v, u) for u, v in edges}
    best = 0
    for cycle in all_cycles(n, edges):
        p = len(cycle)
        chord = False
        for i in range(p):
            for j in range(i + 1, p):
                if j - i in (1, p - 1):
                    continue
                a, b = cycle[i], cycle[j]
                if ((a, b) if a < b else (b, a)) in edge_set:
                    chord = True
                    break
            if chord:
                break
        if not chord:
            best = max(best, p)
    return best


def is_connected_oracle(n: int, edges: "list[tuple[int, int]]") -> bool:
    if n == 0:
        return True
    adj = adjacency_sets(n, edges)
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == n


def canonical_form(n: int, edges: "list[tuple[int, int]]") -> "tuple[tuple[int, int], ...]":
    """Lexicographically least relabelling of the edge set (n ≤ 7 territory)."""
    best = None
    for perm in permutations(range(n)):
        relabelled = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in edges
        )
        key = tuple(relabelled)
        if best is None or key < best:
            best = key
    return best


def connected_graphs_up_to_iso(max_n: int, max_m: int):
    """All connected graphs with n ≤ max_n, m ≤ max_m, one per isomorphism class."""
    seen: set[tuple[int, tuple[tuple[int, int], ...]]] = set()
    out: list[tuple[int, list[tuple[int, int]]]] = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for m in range(n - 1, min(len(pairs), max_m) + 1):
            for chosen in combinations(pairs, m):
                edges = list(chosen)
                if not is_connected_oracle(n, edges):
                    continue
                key = (n, canonical_form(n, edges))
                if key in seen:
                    continue
                seen.add(key)
                out.append((n, edges))
    return out


def has_cut_vertex(n: int, edges: "list[tuple[int, int]]") -> bool:
    for drop in range(n):
        keep = [v for v in range(n) if v != drop]
        relabel = {v: i for i, v in enumerate(keep)}
        sub = [
            (relabel[u], relabel[v])
            for u, v in edges
            if u != drop and v != drop
        ]
        if not is_connected_oracle(n - 1, sub):
            return True
    return False
