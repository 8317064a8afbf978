"""Rainbow connection colouring toolkit.

Builds edge colourings of bridgeless (and, via bridge contraction,
general) connected graphs so that every vertex pair is joined by a path
whose edges all carry distinct colours, with palette sizes bounded by a
layered sum over a dominating-set hierarchy.  Ships exact solvers for
small graphs, an independent verifier, graph generators, plain-text
formats, and a benchmark harness.
"""

from .bench import BenchRow, bench_graph, format_csv, run_bench
from .errors import (
    CapExceededError,
    GraphInputError,
    InternalInvariantError,
    ParseError,
    PartialColouringError,
    PreconditionError,
)
from .exact import ExactResult, exact_rc, exact_rc_naive, rc_lower_bound
from .formats import (
    parse_colouring,
    parse_edge_list,
    read_colouring_file,
    read_edge_list_file,
    write_colouring,
    write_colouring_file,
    write_edge_list,
    write_edge_list_file,
)
from .generators import (
    FamilySpec,
    classic,
    complete_graph,
    cycle_chain,
    cycle_chain_bundle,
    cycle_graph,
    path_graph,
    random_bridgeless,
    random_connected,
    random_tree,
    star_graph,
    thick_path,
    thick_path_bundle,
)
from .graph import (
    UNREACHABLE,
    DistanceVector,
    Graph,
    bfs_distances,
    build_graph,
    distances_to_set,
    eccentricity,
    eccentricities,
    is_connected,
    induced_subgraph,
    normalize_edge,
    radius_diameter_center,
)
from .growth import ColourPools, Ear, LayerResult, LayerState, even_colour_ear, grow_layer
from .pipelines import (
    ColouringReport,
    MODE_DIAMETER,
    MODE_RADIUS,
    colour_bridgeless_diameter,
    colour_bridgeless_radius,
    colour_general,
    palette_bound,
)
from .structure import (
    BridgeSet,
    ContractionMap,
    chordality,
    contract_bridges,
    find_bridges,
    find_bridges_naive,
    is_isometric_cycle,
    largest_isometric_cycle,
    shortest_cycle_through,
)
from .verify import EdgeColouring, VerificationResult, rainbow_path_exists, verify_rainbow_connected

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "BenchRow",
    "BridgeSet",
    "DistanceVector",
    "CapExceededError",
    "ColourPools",
    "ColouringReport",
    "ContractionMap",
    "Ear",
    "EdgeColouring",
    "ExactResult",
    "FamilySpec",
    "Graph",
    "GraphInputError",
    "InternalInvariantError",
    "LayerResult",
    "LayerState",
    "MODE_DIAMETER",
    "MODE_RADIUS",
    "ParseError",
    "PartialColouringError",
    "PreconditionError",
    "VerificationResult",
    "bench_graph",
    "bfs_distances",
    "build_graph",
    "chordality",
    "classic",
    "colour_bridgeless_diameter",
    "colour_bridgeless_radius",
    "colour_general",
    "complete_graph",
    "contract_bridges",
    "cycle_chain",
    "cycle_chain_bundle",
    "cycle_graph",
    "distances_to_set",
    "eccentricities",
    "eccentricity",
    "even_colour_ear",
    "exact_rc",
    "exact_rc_naive",
    "find_bridges",
    "find_bridges_naive",
    "format_csv",
    "grow_layer",
    "induced_subgraph",
    "is_connected",
    "is_isometric_cycle",
    "largest_isometric_cycle",
    "normalize_edge",
    "palette_bound",
    "parse_colouring",
    "parse_edge_list",
    "path_graph",
    "radius_diameter_center",
    "rainbow_path_exists",
    "random_bridgeless",
    "random_connected",
    "random_tree",
    "rc_lower_bound",
    "read_colouring_file",
    "read_edge_list_file",
    "run_bench",
    "shortest_cycle_through",
    "star_graph",
    "thick_path",
    "thick_path_bundle",
    "verify_rainbow_connected",
    "write_colouring",
    "write_colouring_file",
    "write_edge_list",
    "write_edge_list_file",
]
