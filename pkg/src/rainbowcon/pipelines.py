"""End-to-end rainbow colouring pipelines with palette-bound reports.

Radius mode seeds the growth at a centre vertex and runs one layer per
radius step; diameter mode trades the all-pairs centre search for a
single eccentricity computation from vertex 0.  The general pipeline
contracts bridges first, colours the bridgeless quotient, lifts the
result back, and gives every bridge its own colour.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, InternalInvariantError, PreconditionError
from .graph import Graph, bfs_distances, normalize_edge, radius_diameter_center
from .growth import ColourPools, Ear, grow_layer
from .structure import ISO_CAP, contract_bridges, find_bridges, largest_isometric_cycle
from .verify import EdgeColouring, verify_rainbow_connected

MODE_RADIUS = "radius"
MODE_DIAMETER = "diameter"

ZETA_FALLBACK_LABEL = "fallback 2r+1"


@dataclass(frozen=True)
class LayerSummary:
    k: int
    ears_added: int
    fresh_colours: int


@dataclass(frozen=True)
class LayerDetail:
    """Complete trace of one growth layer.

    Recorded only on request.  Ear colour words use provisional ids (the
    layer's own pools), not the densely renumbered final palette.
    """

    k: int
    pools: ColourPools
    dom_before: tuple[int, ...]
    dom_after: tuple[int, ...]
    ears: tuple[Ear, ...]


@dataclass
class ColouringReport:
    mode: str
    n: int
    m: int
    colours_used: int
    r: int | None
    d: int | None
    b: int
    zeta_bound: int | None
    bound_m: int
    bound_ok: bool
    per_layer: tuple[LayerSummary, ...]
    verified: bool | None = None
    layers: tuple[LayerDetail, ...] | None = None

    def to_json_dict(self) -> dict:
        """Schema-1 report; layer traces are deliberately not serialized."""
        return {
            "schema": 1,
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "colours_used": self.colours_used,
            "r": self.r,
            "d": self.d,
            "b": self.b,
            "zeta_bound": self.zeta_bound if self.zeta_bound is not None else ZETA_FALLBACK_LABEL,
            "bound_m": self.bound_m,
            "bound_ok": self.bound_ok,
            "per_layer": [
                {"k": s.k, "ears_added": s.ears_added, "fresh_colours": s.fresh_colours}
                for s in self.per_layer
            ],
            "verified": self.verified,
        }


def palette_bound(layers: int, zeta_bound: int | None) -> int:
    """Colour budget for the given number of layers: sum of min(2k+1, zeta)."""
    total = 0
    for k in range(1, layers + 1):
        width = 2 * k + 1
        if zeta_bound is not None and zeta_bound < width:
            width = zeta_bound
        total += width
    return total


def _zeta_or_none(g: Graph) -> int | None:
    if g.vertex_count > ISO_CAP:
        return None
    return largest_isometric_cycle(g)


def _compact(colouring: EdgeColouring) -> EdgeColouring:
    ids = sorted(set(colouring.colour_of.values()))
    remap = {c: i for i, c in enumerate(ids)}
    return EdgeColouring({e: remap[c] for e, c in colouring.colour_of.items()})


def _maybe_verify(g: Graph, colouring: EdgeColouring) -> bool | None:
    try:
        return verify_rainbow_connected(g, colouring).rainbow_connected
    except CapExceededError:
        return None


def _run_layers(
    g: Graph,
    seeds: list[int],
    layer_count: int,
    zeta_bound: int | None,
    record: bool,
) -> tuple[EdgeColouring, list[LayerSummary], list[LayerDetail]]:
    colouring = EdgeColouring({})
    dom = set(seeds)
    in_dom = bytearray(g.vertex_count)
    for s in seeds:
        in_dom[s] = 1
    live = [list(row) for row in g.adjacency]
    summaries: list[LayerSummary] = []
    details: list[LayerDetail] = []
    first_id = 0
    for k in range(layer_count, 0, -1):
        pools = ColourPools.for_layer(k, zeta_bound, first_id)
        first_id += pools.size
        dom_before = tuple(sorted(dom)) if record else ()
        result = grow_layer(g, dom, k, pools, colouring, in_dom=in_dom, live_adjacency=live)
        summaries.append(LayerSummary(k, result.ears_added, result.fresh_colours))
        if record:
            details.append(LayerDetail(k, pools, dom_before, tuple(sorted(dom)), result.ears))
    if len(colouring.colour_of) != g.edge_count:
        raise InternalInvariantError(
            f"pipeline left {g.edge_count - len(colouring.colour_of)} edges uncoloured"
        )
    return colouring, summaries, details


def _empty_report(mode: str, g: Graph, want_radius: bool) -> tuple[EdgeColouring, ColouringReport]:
    report = ColouringReport(
        mode=mode,
        n=g.vertex_count,
        m=0,
        colours_used=0,
        r=0 if want_radius else None,
        d=0,
        b=0,
        zeta_bound=None,
        bound_m=0,
        bound_ok=True,
        per_layer=(),
    )
    return EdgeColouring({}), report


def _reject_bridges(g: Graph) -> None:
    bridges = find_bridges(g)
    if bridges.count:
        u, v = bridges.bridges[0]
        raise PreconditionError(
            f"graph has {bridges.count} bridge(s), e.g. ({u}, {v}); use colour_general"
        )


def colour_bridgeless_radius(
    g: Graph, *, verify: bool = False, record_layers: bool = False
) -> tuple[EdgeColouring, ColouringReport]:
    """Colour a bridgeless graph with at most sum of min(2k+1, zeta) colours.

    Layers run k = r..1 from a centre vertex, so the palette never exceeds
    r(r+2).  Raises PreconditionError on disconnected or bridged input.
    """
    if g.vertex_count == 0:
        return _empty_report(MODE_RADIUS, g, True)
    _reject_bridges(g)
    r, d, center = radius_diameter_center(g)
    zeta = _zeta_or_none(g) if r >= 1 else None
    colouring, summaries, details = _run_layers(g, [center], r, zeta, record_layers)
    final = _compact(colouring)
    bound = palette_bound(r, zeta)
    used = final.palette_size
    report = ColouringReport(
        mode=MODE_RADIUS,
        n=g.vertex_count,
        m=g.edge_count,
        colours_used=used,
        r=r,
        d=d,
        b=0,
        zeta_bound=zeta,
        bound_m=bound,
        bound_ok=used <= bound,
        per_layer=tuple(summaries),
        verified=_maybe_verify(g, final) if verify else None,
        layers=tuple(details) if record_layers else None,
    )
    return final, report


def colour_bridgeless_diameter(
    g: Graph, *, verify: bool = False, record_layers: bool = False
) -> tuple[EdgeColouring, ColouringReport]:
    """Like the radius pipeline but seeded at vertex 0, avoiding the O(nm)
    centre search.  Runs ecc(0) layers, so the palette bound uses ecc(0),
    which never exceeds the diameter.  The true radius is not computed and
    is reported as None.
    """
    if g.vertex_count == 0:
        return _empty_report(MODE_DIAMETER, g, False)
    _reject_bridges(g)
    ecc0 = max(bfs_distances(g, 0).dist)
    zeta = _zeta_or_none(g) if ecc0 >= 1 else None
    colouring, summaries, details = _run_layers(g, [0], ecc0, zeta, record_layers)
    final = _compact(colouring)
    bound = palette_bound(ecc0, zeta)
    used = final.palette_size
    report = ColouringReport(
        mode=MODE_DIAMETER,
        n=g.vertex_count,
        m=g.edge_count,
        colours_used=used,
        r=None,
        d=ecc0,
        b=0,
        zeta_bound=zeta,
        bound_m=bound,
        bound_ok=used <= bound,
        per_layer=tuple(summaries),
        verified=_maybe_verify(g, final) if verify else None,
        layers=tuple(details) if record_layers else None,
    )
    return final, report


def colour_general(
    g: Graph, mode: str = MODE_RADIUS, *, verify: bool = False, record_layers: bool = False
) -> tuple[EdgeColouring, ColouringReport]:
    """Colour any connected graph: contract bridges, colour the quotient,
    lift, then give each bridge a brand-new colour.
    """
    if mode not in (MODE_RADIUS, MODE_DIAMETER):
        raise PreconditionError(f"unknown mode {mode!r}")
    if g.vertex_count == 0:
        return _empty_report(f"general-{mode}", g, mode == MODE_RADIUS)
    contraction = contract_bridges(g)
    quotient = contraction.quotient
    if mode == MODE_RADIUS:
        qcolouring, qreport = colour_bridgeless_radius(quotient, record_layers=record_layers)
    else:
        qcolouring, qreport = colour_bridgeless_diameter(quotient, record_layers=record_layers)
    vmap = contraction.vertex_map
    bridge_set = set(contraction.bridge_list)
    qmap = qcolouring.colour_of
    lifted: dict[tuple[int, int], int] = {}
    for e in g.edges:
        if e in bridge_set:
            continue
        lifted[e] = qmap[normalize_edge(vmap[e[0]], vmap[e[1]])]
    base = qcolouring.palette_size
    for i, e in enumerate(contraction.bridge_list):
        lifted[e] = base + i
    final = EdgeColouring(lifted)
    b = len(contraction.bridge_list)
    bound = qreport.bound_m + b
    used = final.palette_size
    report = ColouringReport(
        mode=f"general-{mode}",
        n=g.vertex_count,
        m=g.edge_count,
        colours_used=used,
        r=qreport.r,
        d=qreport.d,
        b=b,
        zeta_bound=qreport.zeta_bound,
        bound_m=bound,
        bound_ok=used <= bound,
        per_layer=qreport.per_layer,
        verified=_maybe_verify(g, final) if verify else None,
        layers=qreport.layers,
    )
    return final, report
