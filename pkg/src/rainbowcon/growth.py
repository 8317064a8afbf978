"""Layer growth engine: extend a rainbow-coloured k-step dominating set.

One call to grow_layer runs a single breadth-first search from the current
dominating set D over the graph minus the edges inside D, closes evenly
coloured ears at acceptable meeting edges, and returns the grown set with
the extended colouring.  FIFO queue seeded with sorted D plus sorted
adjacency rows make every outcome deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalInvariantError, PreconditionError
from .graph import Graph, normalize_edge
from .verify import EdgeColouring

ORIENT_A = "a-first"
ORIENT_B = "b-first"


@dataclass(frozen=True)
class ColourPools:
    """Two ordered pools of fresh colour ids for one growth layer.

    Ears read pool A ascending from one end and pool B ascending from the
    other, so a layer growing a k-step dominating set needs at most
    min(2k+1, zeta) ids in total, zeta being the largest isometric cycle.
    """

    pool_a: tuple[int, ...]
    pool_b: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.pool_a) + len(self.pool_b)

    @classmethod
    def for_layer(cls, k: int, zeta_bound: int | None = None, first_id: int = 0) -> "ColourPools":
        """Pools sized min(2k+1, zeta_bound), ids starting at ``first_id``."""
        if k < 1:
            raise PreconditionError(f"layer parameter must be at least 1, got {k}")
        m = 2 * k + 1
        if zeta_bound is not None:
            if zeta_bound < 3:
                raise PreconditionError(f"cycle bound must be at least 3, got {zeta_bound}")
            m = min(m, zeta_bound)
        size_a = (m + 1) // 2
        pool_a = tuple(range(first_id, first_id + size_a))
        pool_b = tuple(range(first_id + size_a, first_id + m))
        return cls(pool_a, pool_b)


@dataclass(frozen=True)
class Ear:
    """A path attached during growth: endpoints in D, interior outside.

    ``vertices`` runs from one anchor to the other; a closed ear repeats
    its anchor at both ends.  ``colour_word`` lists the edge colours in
    path order.
    """

    vertices: tuple[int, ...]
    orientation: str
    colour_word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass
class LayerState:
    """Mutable breadth-first bookkeeping for one growth layer."""

    dominating_set: set[int]
    pools: ColourPools
    parent: list[int]
    depth: list[int]
    parent_edge_colour: list[int]
    foot_entry: list[int]
    queue: deque[int] = field(default_factory=deque)

    @classmethod
    def initialise(cls, g: Graph, dom: set[int], pools: ColourPools) -> "LayerState":
        n = g.vertex_count
        parent = [-1] * n
        depth = [-1] * n
        pec = [-1] * n
        foot_entry = [-1] * n
        seeds = sorted(dom)
        for s in seeds:
            if not 0 <= s < n:
                raise PreconditionError(f"seed vertex {s} out of range for {n} vertices")
            depth[s] = 0
        return cls(dom, pools, parent, depth, pec, foot_entry, deque(seeds))

    def foot(self, v: int) -> tuple[int, int] | None:
        """Last two vertices on the tree path from v down to the seed set."""
        entry = self.foot_entry[v]
        if entry < 0:
            return None
        return (entry, self.parent[entry])


@dataclass(frozen=True)
class LayerResult:
    dominating_set: set[int]
    colouring: EdgeColouring
    ears: tuple[Ear, ...]
    fresh_colours: int
    captured: tuple[int, ...]
    leftover_edges: int

    @property
    def ears_added(self) -> int:
        return len(self.ears)


def _pattern_colour(i: int, p: int, pools: ColourPools, orientation: str) -> int:
    """Colour of ear edge ``i`` (0-based along the ear) in the even pattern."""
    if orientation == ORIENT_A:
        cut = (p + 1) // 2
        pool, idx = (pools.pool_a, i) if i < cut else (pools.pool_b, p - 1 - i)
    elif orientation == ORIENT_B:
        cut = p // 2
        pool, idx = (pools.pool_b, i) if i < cut else (pools.pool_a, p - 1 - i)
    else:
        raise PreconditionError(f"unknown orientation {orientation!r}")
    if idx >= len(pool):
        raise InternalInvariantError(
            f"ear of length {p} does not fit pools of size {pools.size}"
        )
    return pool[idx]


def even_colour_ear(
    ear: "Ear | Sequence[int]",
    pools: ColourPools,
    partial: EdgeColouring,
    orientation: str,
    *,
    state: LayerState | None = None,
) -> EdgeColouring:
    """Write the even colour pattern onto an ear, completing any gaps.

    Only uncoloured edges are written.  An already-coloured edge that
    disagrees with the pattern means the acceptance logic let through an
    impossible ear, which is a bug, not bad input.  When ``state`` is
    given, parent_edge_colour is updated for newly coloured tree edges.
    """
    verts = ear.vertices if isinstance(ear, Ear) else tuple(ear)
    p = len(verts) - 1
    if p < 1:
        raise InternalInvariantError("ear must have at least one edge")
    cmap = partial.colour_of
    for i in range(p):
        x, y = verts[i], verts[i + 1]
        e = (x, y) if x < y else (y, x)
        target = _pattern_colour(i, p, pools, orientation)
        have = cmap.get(e)
        if have is None:
            cmap[e] = target
            if state is not None:
                if state.parent[y] == x:
                    state.parent_edge_colour[y] = target
                elif state.parent[x] == y:
                    state.parent_edge_colour[x] = target
        elif have != target:
            raise InternalInvariantError(
                f"ear edge {e} carries colour {have} but the even pattern needs {target}"
            )
    return partial


def detect_meeting(state: LayerState, u: int, v: int) -> str | None:
    """Decide whether BFS edge (u, v), with v already visited, closes an ear.

    Returns the colouring orientation on acceptance, None otherwise.  The
    closure is acceptable when the two feet differ and at least one foot's
    tree edge is still uncoloured.
    """
    fu = state.foot_entry[u]
    fv = state.foot_entry[v]
    if fu == fv:
        return None
    pec = state.parent_edge_colour
    cu = pec[fu] if fu >= 0 else -1
    cv = pec[fv] if fv >= 0 else -1
    if cu >= 0 and cv >= 0:
        return None
    pool_a = state.pools.pool_a
    pool_b = state.pools.pool_b
    if (cu < 0 and cv < 0) or cu == pool_a[0] or (pool_b and cv == pool_b[0]):
        return ORIENT_A
    return ORIENT_B


def _ear_vertices(state: LayerState, u: int, v: int) -> tuple[int, ...]:
    """Reconstruct the ear path anchor..u, v..anchor through the BFS forest."""
    depth = state.depth
    parent = state.parent
    arm_u = [u]
    x = u
    while depth[x] > 0:
        x = parent[x]
        arm_u.append(x)
    arm_u.reverse()
    x = v
    arm_v = [v]
    while depth[x] > 0:
        x = parent[x]
        arm_v.append(x)
    return tuple(arm_u) + tuple(arm_v)


def grow_layer(
    g: Graph,
    dom: set[int],
    k: int,
    pools: ColourPools,
    colouring: EdgeColouring,
    *,
    in_dom: bytearray | None = None,
    live_adjacency: list[list[int]] | None = None,
) -> LayerResult:
    """Grow a k-step dominating set one step, colouring the attached ears.

    ``dom`` and ``colouring`` are extended in place and returned in the
    result.  ``in_dom`` (membership flags) and ``live_adjacency`` (rows
    that may be compacted as edges fall inside the set) let a caller
    thread state across layers; both default to per-call copies.

    Raises PreconditionError when some vertex sits further than k from
    ``dom``, or when a frontier vertex cannot be captured by any ear,
    which means the graph is not bridgeless.
    """
    n = g.vertex_count
    if not dom:
        raise PreconditionError("dominating set must not be empty")
    state = LayerState.initialise(g, dom, pools)
    if in_dom is None:
        in_dom = bytearray(n)
        for s in dom:
            in_dom[s] = 1
    live = live_adjacency is not None
    rows: Sequence[Sequence[int]] = live_adjacency if live else g.adjacency
    cmap = colouring.colour_of
    parent = state.parent
    depth = state.depth
    foot_entry = state.foot_entry
    queue = state.queue
    ears: list[Ear] = []
    captured: list[int] = []
    on_ear = bytearray(n)
    feet: list[int] = []
    while queue:
        u = queue.popleft()
        du = depth[u]
        u_seed = du == 0
        row = rows[u]
        new_row: list[int] = []
        for w in row:
            w_in = in_dom[w]
            if live and not w_in:
                new_row.append(w)
            if depth[w] < 0:
                step = du + 1
                if step > k:
                    raise PreconditionError(
                        f"set is not {k}-step dominating: vertex {w} lies at distance {step}"
                    )
                depth[w] = step
                parent[w] = u
                foot_entry[w] = w if u_seed else foot_entry[u]
                if step == 1:
                    feet.append(w)
                queue.append(w)
                continue
            if u_seed and w_in:
                continue
            if parent[u] == w or parent[w] == u:
                continue
            e = (u, w) if u < w else (w, u)
            if e in cmap:
                continue
            orientation = detect_meeting(state, u, w)
            if orientation is None:
                continue
            verts = _ear_vertices(state, u, w)
            even_colour_ear(verts, pools, colouring, orientation, state=state)
            word = []
            for i in range(len(verts) - 1):
                x, y = verts[i], verts[i + 1]
                word.append(cmap[(x, y) if x < y else (y, x)])
            ears.append(Ear(verts, orientation, tuple(word)))
            for x in verts:
                if not in_dom[x] and not on_ear[x]:
                    on_ear[x] = 1
                    captured.append(x)
        if live:
            rows[u] = new_row
    for f in feet:
        if not on_ear[f]:
            raise PreconditionError(
                f"graph not bridgeless: frontier vertex {f} lies on no ear"
            )
    captured.sort()
    for x in captured:
        in_dom[x] = 1
        dom.add(x)
    leftover = 0
    if captured:
        a1 = pools.pool_a[0]
        gadj = g.adjacency
        for x in captured:
            for y in gadj[x]:
                if in_dom[y]:
                    e = (x, y) if x < y else (y, x)
                    if e not in cmap:
                        cmap[e] = a1
                        leftover += 1
    fresh_ids: set[int] = set()
    for ear in ears:
        fresh_ids.update(ear.colour_word)
    if leftover:
        fresh_ids.add(pools.pool_a[0])
    return LayerResult(dom, colouring, tuple(ears), len(fresh_ids), tuple(captured), leftover)
