"""Graph family constructors: chained cycles, thick paths, their
pigeonhole bundles, classic families, and seeded random graphs.

Every constructor is deterministic given its parameters (and seed), so
frozen test values stay stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapExceededError, GraphInputError
from .graph import Graph, build_graph

VERTEX_CAP = 10**6


def cycle_chain(r: int, zeta: int) -> Graph:
    """Chain of r cycles with sizes min(2i+1, zeta) sharing chain vertices.

    Chain vertices are 0..r.  Link i joins vertices i-1 and i with a path
    of length min(2i, zeta-1) plus the direct edge, so together they form
    a cycle of length min(2i+1, zeta).  The result is bridgeless with
    radius r and largest isometric cycle exactly zeta.
    """
    if r < 1:
        raise GraphInputError(f"r must be at least 1, got {r}")
    if not 3 <= zeta <= 2 * r + 1:
        raise GraphInputError(f"zeta must lie in 3..2r+1 = 3..{2 * r + 1}, got {zeta}")
    edges: list[tuple[int, int]] = []
    nxt = r + 1
    for i in range(1, r + 1):
        length = min(2 * i, zeta - 1)
        prev = i - 1
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, i))
        edges.append((i - 1, i))
    return build_graph(nxt, edges)


def cycle_chain_bundle(r: int, zeta: int) -> Graph:
    """Enough cycle chains glued at one end to force the palette bound.

    Takes B**r + 1 copies of cycle_chain(r, zeta), B being the layer-sum
    bound, and identifies their end vertices; any colouring of the bundle
    below B colours would repeat a pattern across two copies, breaking
    rainbow connectivity between them.  The shared hub is vertex 0.
    """
    base = cycle_chain(r, zeta)
    bound = sum(min(2 * i + 1, zeta) for i in range(1, r + 1))
    copies = bound**r + 1
    hub = r
    per_copy = base.vertex_count - 1
    total = 1 + copies * per_copy
    if total > VERTEX_CAP:
        raise CapExceededError(
            f"bundle needs {copies} copies and {total} vertices, above the cap {VERTEX_CAP}"
        )
    edges: list[tuple[int, int]] = []
    for c in range(copies):
        offset = 1 + c * per_copy

        def relabel(v: int, off: int = offset) -> int:
            if v == hub:
                return 0
            return off + v if v < hub else off + v - 1

        for u, v in base.edges:
            edges.append((relabel(u), relabel(v)))
    return build_graph(total, edges)


def thick_path(r: int, kappa: int) -> Graph:
    """Layered path of r(r+1) cliques of size kappa plus one apex, with
    column-0 shortcut edges that pull the eccentricity of vertex 0 down
    to exactly r.  kappa-connected for every kappa >= 1.

    Vertex (i, j) has id i*kappa + j; the apex is the last id.
    """
    if r < 1:
        raise GraphInputError(f"r must be at least 1, got {r}")
    if kappa < 1:
        raise GraphInputError(f"kappa must be at least 1, got {kappa}")
    t = r * (r + 1)
    apex = t * kappa
    edges: list[tuple[int, int]] = []
    for i in range(t):
        base_i = i * kappa
        for j in range(kappa):
            for j2 in range(j + 1, kappa):
                edges.append((base_i + j, base_i + j2))
        if i + 1 < t:
            for j in range(kappa):
                for j2 in range(kappa):
                    edges.append((base_i + j, (i + 1) * kappa + j2))
        else:
            for j in range(kappa):
                edges.append((base_i + j, apex))
    jumps = [0]
    acc = 0
    for i in range(1, r + 1):
        acc += 2 * (r - i + 1)
        jumps.append(acc)
    for i in range(r):
        a = jumps[i] * kappa if jumps[i] < t else apex
        b = jumps[i + 1] * kappa if jumps[i + 1] < t else apex
        edges.append((a, b))
    return build_graph(apex + 1, edges)


def thick_path_bundle(r: int, kappa: int) -> Graph:
    """(r(r+2))**r + 1 copies of thick_path(r, kappa) sharing their first
    layer, the kappa-connected analogue of cycle_chain_bundle.  The shared
    layer keeps ids 0..kappa-1.
    """
    base = thick_path(r, kappa)
    bound = r * (r + 2)
    copies = bound**r + 1
    per_copy = base.vertex_count - kappa
    total = kappa + copies * per_copy
    if total > VERTEX_CAP:
        raise CapExceededError(
            f"bundle needs {copies} copies and {total} vertices, above the cap {VERTEX_CAP}"
        )
    edges: list[tuple[int, int]] = []
    for c in range(copies):
        offset = kappa + c * per_copy

        def relabel(v: int, off: int = offset) -> int:
            return v if v < kappa else off + (v - kappa)

        for u, v in base.edges:
            edges.append((relabel(u), relabel(v)))
    return build_graph(total, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"n must be at least 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star with n leaves (n+1 vertices, hub 0)."""
    if n < 1:
        raise GraphInputError(f"a star needs at least 1 leaf, got {n}")
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"n must be at least 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def classic(tag: str, n: int) -> Graph:
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "complete": complete_graph,
    }
    if tag not in builders:
        raise GraphInputError(f"unknown family {tag!r}, expected one of {sorted(builders)}")
    return builders[tag](n)


def random_bridgeless(n: int, m: int, seed: int = 0) -> Graph:
    """Random cycle through all vertices plus random chords: always
    connected and bridgeless, deterministic for a given seed.
    """
    if n < 3:
        raise GraphInputError(f"need at least 3 vertices, got {n}")
    limit = n * (n - 1) // 2
    if not n <= m <= limit:
        raise GraphInputError(f"m must lie in {n}..{limit} for n={n}, got {m}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    chosen: set[tuple[int, int]] = set()
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        chosen.add((u, v) if u < v else (v, u))
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v) if u < v else (v, u))
    return build_graph(n, sorted(chosen))


def random_tree(n: int, seed: int = 0) -> Graph:
    if n < 1:
        raise GraphInputError(f"n must be at least 1, got {n}")
    rng = random.Random(seed)
    return build_graph(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_connected(n: int, m: int, seed: int = 0) -> Graph:
    """Random tree plus random extra edges; connected, possibly bridged."""
    if n < 1:
        raise GraphInputError(f"n must be at least 1, got {n}")
    limit = n * (n - 1) // 2
    if not n - 1 <= m <= limit:
        raise GraphInputError(f"m must lie in {n - 1}..{limit} for n={n}, got {m}")
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    for i in range(1, n):
        chosen.add((rng.randrange(i), i))
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v) if u < v else (v, u))
    return build_graph(n, sorted(chosen))


_FAMILIES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "cycle-chain": (("r", "zeta"), ()),
    "cycle-chain-bundle": (("r", "zeta"), ()),
    "thick-path": (("r", "kappa"), ()),
    "thick-path-bundle": (("r", "kappa"), ()),
    "path": (("n",), ()),
    "cycle": (("n",), ()),
    "star": (("n",), ()),
    "complete": (("n",), ()),
    "random-bridgeless": (("n", "m"), ("seed",)),
    "random-connected": (("n", "m"), ("seed",)),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with validated integer parameters, e.g. from a bench
    corpus line like ``cycle-chain r=2 zeta=5``.
    """

    family: str
    params: tuple[tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        tokens = text.split()
        if not tokens:
            raise GraphInputError("empty family spec")
        family = tokens[0]
        if family not in _FAMILIES:
            raise GraphInputError(f"unknown family {family!r}, expected one of {sorted(_FAMILIES)}")
        required, optional = _FAMILIES[family]
        params: dict[str, int] = {}
        for token in tokens[1:]:
            name, sep, raw = token.partition("=")
            if not sep:
                raise GraphInputError(f"malformed parameter {token!r}, expected name=value")
            if name not in required and name not in optional:
                raise GraphInputError(f"family {family!r} does not take parameter {name!r}")
            if name in params:
                raise GraphInputError(f"duplicate parameter {name!r}")
            try:
                params[name] = int(raw)
            except ValueError:
                raise GraphInputError(f"parameter {name!r} must be an integer, got {raw!r}") from None
        for name in required:
            if name not in params:
                raise GraphInputError(f"family {family!r} requires parameter {name!r}")
        return cls(family, tuple(sorted(params.items())))

    def graph_id(self) -> str:
        parts = [self.family] + [f"{k}{v}" for k, v in self.params]
        return "-".join(parts)

    def build(self) -> Graph:
        p = dict(self.params)
        family = self.family
        if family == "cycle-chain":
            return cycle_chain(p["r"], p["zeta"])
        if family == "cycle-chain-bundle":
            return cycle_chain_bundle(p["r"], p["zeta"])
        if family == "thick-path":
            return thick_path(p["r"], p["kappa"])
        if family == "thick-path-bundle":
            return thick_path_bundle(p["r"], p["kappa"])
        if family == "random-bridgeless":
            return random_bridgeless(p["n"], p["m"], p.get("seed", 0))
        if family == "random-connected":
            return random_connected(p["n"], p["m"], p.get("seed", 0))
        return classic(family, p["n"])
