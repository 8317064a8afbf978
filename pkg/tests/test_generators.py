import pytest

from rainbowcon import (
    CapExceededError,
    FamilySpec,
    GraphInputError,
    classic,
    complete_graph,
    cycle_chain,
    cycle_chain_bundle,
    cycle_graph,
    eccentricity,
    exact_rc,
    find_bridges,
    is_connected,
    largest_isometric_cycle,
    path_graph,
    radius_diameter_center,
    random_bridgeless,
    random_connected,
    random_tree,
    star_graph,
    thick_path,
    thick_path_bundle,
)

from helpers import canonical_form, has_cut_vertex


def test_cycle_chain_smallest_is_triangle():
    g = cycle_chain(1, 3)
    assert g.vertex_count == 3
    assert canonical_form(3, list(g.edges)) == ((0, 1), (0, 2), (1, 2))


def test_cycle_chain_two_five_shape():
    g = cycle_chain(2, 5)
    assert g.vertex_count == 7
    assert g.edge_count == 8
    assert find_bridges(g).count == 0
    r, d, _ = radius_diameter_center(g)
    assert r == 2
    assert eccentricity(g, 2) == 2


def test_cycle_chain_iso_cycle_matches_zeta():
    for r, zeta in [(1, 3), (2, 3), (2, 5), (3, 3), (3, 5), (3, 7), (4, 9)]:
        g = cycle_chain(r, zeta)
        assert find_bridges(g).count == 0
        assert largest_isometric_cycle(g) == zeta
        assert eccentricity(g, r) == r


def test_cycle_chain_rejects_bad_parameters():
    with pytest.raises(GraphInputError):
        cycle_chain(0, 3)
    with pytest.raises(GraphInputError):
        cycle_chain(2, 2)
    with pytest.raises(GraphInputError):
        cycle_chain(2, 6)


def test_cycle_chain_bundle_smallest():
    g = cycle_chain_bundle(1, 3)
    assert g.vertex_count == 9
    assert g.edge_count == 12
    assert find_bridges(g).count == 0
    assert radius_diameter_center(g)[0] == 1


def test_cycle_chain_bundle_is_tight_at_r1():
    assert exact_rc(cycle_chain_bundle(1, 3)).rc == 3


def test_cycle_chain_bundle_cap():
    with pytest.raises(CapExceededError):
        cycle_chain_bundle(4, 9)


def test_thick_path_smallest_is_triangle():
    g = thick_path(1, 1)
    assert g.vertex_count == 3
    assert canonical_form(3, list(g.edges)) == ((0, 1), (0, 2), (1, 2))


def test_thick_path_shortcut_layout():
    # r=3, kappa=2: jumps 0 -> 6 -> 10 -> 12 over t=12 layers.
    g = thick_path(3, 2)
    assert g.vertex_count == 25
    assert g.has_edge(0, 12)
    assert g.has_edge(12, 20)
    assert g.has_edge(20, 24)
    assert eccentricity(g, 0) == 3


def test_thick_path_eccentricity_r2():
    assert eccentricity(thick_path(2, 1), 0) == 2


def test_thick_path_min_degree_and_connectivity():
    for r, kappa in [(1, 2), (2, 2), (1, 3), (2, 3)]:
        g = thick_path(r, kappa)
        assert min(g.degree(v) for v in range(g.vertex_count)) >= kappa
        if kappa >= 2:
            assert not has_cut_vertex(g.vertex_count, list(g.edges))


def test_thick_path_bundle_smallest():
    g = thick_path_bundle(1, 1)
    assert g.vertex_count == 9
    assert g.edge_count == 12
    assert exact_rc(g).rc == 3


def test_thick_path_bundle_two_connected():
    g = thick_path_bundle(1, 2)
    assert not has_cut_vertex(g.vertex_count, list(g.edges))


def test_thick_path_bundle_cap():
    with pytest.raises(CapExceededError):
        thick_path_bundle(4, 3)


def test_classic_families():
    assert classic("cycle", 5).edge_count == 5
    assert classic("path", 4).edge_count == 3
    assert classic("star", 4).vertex_count == 5
    assert find_bridges(classic("star", 4)).count == 4
    assert classic("complete", 5).edge_count == 10
    with pytest.raises(GraphInputError):
        classic("wheel", 5)


def test_classic_bad_sizes():
    with pytest.raises(GraphInputError):
        cycle_graph(2)
    with pytest.raises(GraphInputError):
        path_graph(0)
    with pytest.raises(GraphInputError):
        star_graph(0)
    with pytest.raises(GraphInputError):
        complete_graph(0)


def test_random_bridgeless_has_no_bridges():
    g = random_bridgeless(20, 30, seed=7)
    assert g.vertex_count == 20
    assert g.edge_count == 30
    assert find_bridges(g).count == 0


def test_random_bridgeless_deterministic():
    a = random_bridgeless(15, 25, seed=3)
    b = random_bridgeless(15, 25, seed=3)
    c = random_bridgeless(15, 25, seed=4)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_random_bridgeless_rejects_infeasible():
    with pytest.raises(GraphInputError):
        random_bridgeless(2, 3)
    with pytest.raises(GraphInputError):
        random_bridgeless(5, 4)
    with pytest.raises(GraphInputError):
        random_bridgeless(5, 11)


def test_random_tree_is_a_tree():
    for n in (1, 2, 7, 12):
        g = random_tree(n, seed=n)
        assert g.edge_count == n - 1
        assert is_connected(g)


def test_random_connected_is_connected():
    for trial in range(8):
        g = random_connected(9, 10 + trial, seed=trial)
        assert is_connected(g)
        assert g.edge_count == 10 + trial


def test_family_spec_parse_and_build():
    spec = FamilySpec.parse("cycle-chain r=2 zeta=5")
    assert spec.graph_id() == "cycle-chain-r2-zeta5"
    assert spec.build().vertex_count == 7


def test_family_spec_seed_default():
    spec = FamilySpec.parse("random-bridgeless n=10 m=15")
    assert spec.build().edges == random_bridgeless(10, 15, seed=0).edges


def test_family_spec_parse_errors():
    with pytest.raises(GraphInputError):
        FamilySpec.parse("moebius n=5")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("cycle n=5 r=2")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("cycle n=five")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("cycle n=5 n=6")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("cycle-chain r=2")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("cycle 5")
    with pytest.raises(GraphInputError):
        FamilySpec.parse("")
