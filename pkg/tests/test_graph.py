"""Strongly connected components, cycle classification, connectivity ladder."""

from __future__ import annotations

import random

import pytest

from quivalg import (
    INFINITE,
    Quiver,
    classify_cycles,
    is_connected,
    is_pairwise_strongly_connected,
    is_pairwise_strongly_connected_definitional,
    is_path_reversible,
    is_strongly_connected,
    kronecker_square,
    scc,
)
from quivalg.oracle import random_quiver

from quiverzoo import (
    a_chain,
    bridge_two_cycle,
    chained_two_cycles,
    isolated,
    loop_plus_arrow,
    loop_to_loop,
    loops_quiver,
    overlapping_two_cycles,
    three_cycle,
    two_cycle,
    two_disjoint_arrows,
)


def test_scc_of_bridge_two_cycle():
    d = scc(bridge_two_cycle())
    assert d.components == (("v1",), ("v2", "v3"), ("v4",))
    assert d.internal_arrow_counts == (0, 2, 0)
    assert d.component_of == {"v1": 0, "v2": 1, "v3": 1, "v4": 2}
    assert d.condensation == ((1,), (2,), ())
    assert d.nontrivial_indices == (1,)


def test_scc_of_chain_is_all_singletons():
    d = scc(a_chain(4))
    assert d.components == (("v1",), ("v2",), ("v3",), ("v4",))
    assert d.internal_arrow_counts == (0, 0, 0, 0)


def test_scc_components_ordered_by_least_vertex_index():
    # v1 is reachable from the cycle, so discovery order differs from index order
    q = Quiver(
        ["v1", "v2", "v3"],
        [("a", "v2", "v3"), ("b", "v3", "v2"), ("c", "v2", "v1")],
    )
    d = scc(q)
    assert d.components == (("v1",), ("v2", "v3"))


def test_loop_counts_as_nontrivial_component():
    d = scc(loops_quiver(1))
    assert d.components == (("v",),)
    assert d.internal_arrow_counts == (1,)


def test_classification_of_acyclic_chain():
    c = classify_cycles(a_chain(4))
    assert not c.has_cycle
    assert not c.has_source_cycle and not c.has_sink_cycle
    assert c.all_cycles_isolated
    assert c.exclusive_condition
    assert c.max_chain_length == 0


def test_classification_of_isolated_two_cycle():
    c = classify_cycles(two_cycle())
    assert c.has_cycle
    assert not c.has_source_cycle and not c.has_sink_cycle
    assert c.all_cycles_isolated
    assert c.exclusive_condition
    assert c.max_chain_length == 1


def test_classification_of_bridge_two_cycle():
    # v3 has an extra outgoing arrow and v2 an extra incoming one
    c = classify_cycles(bridge_two_cycle())
    assert c.has_cycle
    assert c.has_source_cycle and c.has_sink_cycle
    assert not c.all_cycles_isolated
    assert c.exclusive_condition
    assert c.max_chain_length == 1


def test_classification_of_chained_two_cycles():
    c = classify_cycles(chained_two_cycles())
    assert c.has_source_cycle and c.has_sink_cycle
    assert c.exclusive_condition
    assert c.max_chain_length == 2


def test_classification_of_loop_to_loop():
    c = classify_cycles(loop_to_loop())
    assert c.has_source_cycle and c.has_sink_cycle
    assert c.exclusive_condition
    assert c.max_chain_length == 2


def test_classification_of_loop_plus_arrow():
    c = classify_cycles(loop_plus_arrow())
    assert c.has_cycle
    assert c.has_source_cycle
    assert not c.has_sink_cycle
    assert c.exclusive_condition
    assert c.max_chain_length == 1


def test_overlapping_cycles_break_the_exclusive_condition():
    c = classify_cycles(overlapping_two_cycles())
    assert c.has_cycle
    assert not c.exclusive_condition
    assert c.max_chain_length is INFINITE


def test_two_loops_on_one_vertex_break_the_exclusive_condition():
    c = classify_cycles(loops_quiver(2))
    assert not c.exclusive_condition
    assert c.max_chain_length is INFINITE


def test_single_loop_is_exclusive():
    c = classify_cycles(loops_quiver(1))
    assert c.exclusive_condition
    assert c.max_chain_length == 1


def test_connectivity_of_underlying_graph():
    assert is_connected(a_chain(4))
    assert is_connected(isolated(1))
    assert not is_connected(isolated(2))
    assert not is_connected(two_disjoint_arrows())


def test_strong_connectivity():
    assert is_strongly_connected(three_cycle())
    assert is_strongly_connected(loops_quiver(1))
    assert not is_strongly_connected(a_chain(2))
    assert not is_strongly_connected(bridge_two_cycle())


def test_three_cycle_is_not_pairwise_strongly_connected():
    # paths v1 -> v2 and v1 -> v3 never share a length in a 3-cycle
    assert is_strongly_connected(three_cycle())
    assert not is_pairwise_strongly_connected(three_cycle())
    assert not is_pairwise_strongly_connected_definitional(three_cycle())


def test_two_cycle_separates_the_two_pairwise_notions():
    # the known divergence: the literal definition only quantifies over
    # pairs with distinct entries, and the 2-cycle satisfies it at k = 1,
    # while its square falls apart into two 2-cycles
    q = two_cycle()
    assert is_pairwise_strongly_connected_definitional(q)
    assert not is_pairwise_strongly_connected(q)
    assert not is_strongly_connected(kronecker_square(q).square)


def test_single_vertex_is_pairwise_strongly_connected():
    assert is_pairwise_strongly_connected(isolated(1))
    assert is_pairwise_strongly_connected_definitional(isolated(1))
    assert is_pairwise_strongly_connected(loops_quiver(1))
    assert is_pairwise_strongly_connected_definitional(loops_quiver(1))


def test_arrowless_two_vertices_are_not_pairwise_strongly_connected():
    assert not is_pairwise_strongly_connected(isolated(2))
    assert not is_pairwise_strongly_connected_definitional(isolated(2))


def test_path_reversibility():
    assert is_path_reversible(two_cycle())
    assert is_path_reversible(isolated(3))
    assert is_path_reversible(three_cycle())
    assert not is_path_reversible(a_chain(2))
    assert not is_path_reversible(bridge_two_cycle())
    assert not is_path_reversible(loop_plus_arrow())


def test_definitional_iteration_guard_raises():
    with pytest.raises(RuntimeError, match="did not close"):
        is_pairwise_strongly_connected_definitional(three_cycle(), max_iterations=1)


def test_pairwise_fast_vs_definitional_on_seeded_samples():
    """The square-based and definitional answers agree except in the one
    mathematically possible direction, which is collected and reported."""
    rng = random.Random(17)
    anomalies = []
    for _ in range(150):
        q = random_quiver(rng)
        fast = is_pairwise_strongly_connected(q)
        literal = is_pairwise_strongly_connected_definitional(q)
        if fast:
            assert literal, f"square-connected but definition fails: {q}"
        if fast != literal:
            anomalies.append(q)
            assert literal and not fast
    if anomalies:
        print(f"definitional/pairwise divergences on {len(anomalies)} quivers:")
        for q in anomalies:
            print("  ", q)
