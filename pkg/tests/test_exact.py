import random

import pytest

from rainbowcon import (
    CapExceededError,
    PreconditionError,
    build_graph,
    colour_bridgeless_radius,
    complete_graph,
    cycle_graph,
    exact_rc,
    exact_rc_naive,
    path_graph,
    random_bridgeless,
    random_connected,
    random_tree,
    rc_lower_bound,
    star_graph,
    verify_rainbow_connected,
)


def test_lower_bound_star_counts_bridges():
    for n in (2, 4, 6):
        assert rc_lower_bound(star_graph(n)) == n


def test_lower_bound_cycle_is_diameter():
    assert rc_lower_bound(cycle_graph(6)) == 3


def test_lower_bound_complete_graph():
    assert rc_lower_bound(complete_graph(4)) == 1


def test_lower_bound_rejects_disconnected():
    with pytest.raises(PreconditionError):
        rc_lower_bound(build_graph(4, [(0, 1), (2, 3)]))


def test_complete_graphs_have_rc_one():
    for n in (3, 4, 5):
        res = exact_rc(complete_graph(n))
        assert res.rc == 1


def test_path_rc_is_its_length():
    for n in (2, 3, 4, 5):
        assert exact_rc(path_graph(n)).rc == n - 1


def test_star_rc_is_leaf_count():
    for n in (2, 3, 4):
        assert exact_rc(star_graph(n)).rc == n


def test_five_cycle_needs_three():
    # Frozen from full naive enumeration: k=2 fails, k=3 succeeds.
    assert exact_rc_naive(cycle_graph(5)).rc == 3
    assert exact_rc(cycle_graph(5)).rc == 3


def test_four_cycle_needs_two():
    assert exact_rc_naive(cycle_graph(4)).rc == 2
    assert exact_rc(cycle_graph(4)).rc == 2


def test_naive_triangle():
    assert exact_rc_naive(cycle_graph(3)).rc == 1


def test_naive_two_edge_path():
    assert exact_rc_naive(path_graph(3)).rc == 2


def test_tree_rc_is_edge_count():
    for trial in range(6):
        g = random_tree(3 + trial, seed=trial)
        if g.edge_count <= 8:
            assert exact_rc(g).rc == g.edge_count


def test_witness_verifies_with_exactly_rc_colours():
    for g in (cycle_graph(5), path_graph(4), complete_graph(4)):
        res = exact_rc(g)
        assert res.witness.palette_size == res.rc
        assert verify_rainbow_connected(g, res.witness).rainbow_connected


def test_exact_at_least_lower_bound():
    for trial in range(8):
        g = random_connected(6, 8, seed=trial)
        res = exact_rc(g)
        assert res.rc >= res.lower_bound_used == rc_lower_bound(g)


def test_exact_within_pipeline_colours():
    for trial in range(6):
        g = random_bridgeless(6, 8, seed=trial)
        _, rep = colour_bridgeless_radius(g)
        assert exact_rc(g).rc <= rep.colours_used


def test_exact_agrees_with_naive_sample():
    for trial in range(12):
        rng = random.Random(trial)
        n = rng.randrange(4, 7)
        m = min(8, n * (n - 1) // 2, n - 1 + rng.randrange(0, 3))
        g = random_connected(n, m, seed=trial)
        assert exact_rc(g).rc == exact_rc_naive(g).rc


def test_edge_cap_raises_and_can_be_overridden():
    with pytest.raises(CapExceededError):
        exact_rc(cycle_graph(17))
    assert exact_rc(complete_graph(7), max_edges=21).rc == 1


def test_naive_cap_raises():
    with pytest.raises(CapExceededError):
        exact_rc_naive(cycle_graph(9))


def test_max_colours_exhaustion():
    with pytest.raises(PreconditionError):
        exact_rc(path_graph(4), max_colours=2)


def test_disconnected_rejected():
    with pytest.raises(PreconditionError):
        exact_rc(build_graph(4, [(0, 1), (2, 3)]))
