"""The brute-force reference side, and its agreement with the fast side."""

from __future__ import annotations

import random

import pytest

from quivalg import (
    CAP_EXCEEDED,
    ExclusiveConditionError,
    INFINITE,
    classify_cycles,
    dimension,
    face_dimension,
    is_path_reversible,
    oracle_dimension,
    oracle_face_dimension_both_readings,
    oracle_max_chain,
    oracle_path_reversible,
    random_quiver,
    validate,
)

from quiverzoo import (
    a_chain,
    bridge_two_cycle,
    chained_two_cycles,
    isolated,
    loop_plus_arrow,
    loop_to_loop,
    loops_quiver,
    overlapping_two_cycles,
    single_arrow,
    three_cycle,
    two_cycle,
    two_sources_one_sink,
)


def test_oracle_dimension_by_enumeration():
    assert oracle_dimension(a_chain(4)) == 10
    assert oracle_dimension(isolated(3)) == 3
    assert oracle_dimension(two_sources_one_sink()) == 5


def test_oracle_dimension_hits_the_cap_on_cycles():
    assert oracle_dimension(two_cycle(), cap=100) is CAP_EXCEEDED
    assert oracle_dimension(loops_quiver(1), cap=100) is CAP_EXCEEDED


def test_oracle_dimension_cap_is_not_triggered_by_finite_counts():
    assert oracle_dimension(a_chain(4), cap=10) == 10
    assert oracle_dimension(a_chain(4), cap=9) is CAP_EXCEEDED


def test_face_dimension_readings_differ_beyond_one_vertex():
    # single arrow: degree 0 has two endpoint pairs, so the entrywise sum is
    # 1 + 1 = 2 while the squared total is 2^2 = 4; degree 1 adds 1 to both
    assert oracle_face_dimension_both_readings(single_arrow()) == (3, 5)
    # two sources into one sink: 3 + 2 entrywise against 9 + 4 squared
    entrywise, total = oracle_face_dimension_both_readings(two_sources_one_sink())
    assert (entrywise, total) == (5, 13)


def test_face_dimension_total_reading_matches_fast_side():
    for q in (a_chain(3), a_chain(4), two_sources_one_sink(), isolated(2)):
        _, total = oracle_face_dimension_both_readings(q)
        assert total == face_dimension(q)


def test_face_dimension_oracle_rejects_cycles():
    with pytest.raises(ValueError, match="cycle"):
        oracle_face_dimension_both_readings(two_cycle())


def test_oracle_path_reversibility():
    assert oracle_path_reversible(two_cycle())
    assert oracle_path_reversible(three_cycle())
    assert oracle_path_reversible(isolated(3))
    assert not oracle_path_reversible(a_chain(2))
    assert not oracle_path_reversible(bridge_two_cycle())
    assert not oracle_path_reversible(loop_plus_arrow())


def test_oracle_max_chain_values():
    assert oracle_max_chain(a_chain(4)) == 0
    assert oracle_max_chain(two_cycle()) == 1
    assert oracle_max_chain(loop_to_loop()) == 2
    assert oracle_max_chain(chained_two_cycles()) == 2
    assert oracle_max_chain(bridge_two_cycle()) == 1


def test_oracle_max_chain_demands_exclusivity():
    with pytest.raises(ExclusiveConditionError, match="share a vertex"):
        oracle_max_chain(loops_quiver(2))
    with pytest.raises(ExclusiveConditionError, match="share a vertex"):
        oracle_max_chain(overlapping_two_cycles())


def test_random_quiver_is_deterministic_and_bounded():
    a = random_quiver(random.Random(99))
    b = random_quiver(random.Random(99))
    assert a == b
    rng = random.Random(1)
    for _ in range(50):
        q = random_quiver(rng, max_vertices=4, max_arrows=6)
        assert 1 <= len(q.vertices) <= 4
        assert len(q.arrows) <= 6
        assert validate(q) == ()


# ---------------------------------------------------------------------------
# fast side vs oracle side on seeded samples


def test_dimension_agrees_with_oracle_on_seeded_quivers():
    rng = random.Random(31)
    for _ in range(120):
        q = random_quiver(rng)
        fast = dimension(q)
        slow = oracle_dimension(q, cap=50_000)
        if slow is CAP_EXCEEDED:
            assert fast is INFINITE
        else:
            assert fast == slow


def test_path_reversibility_agrees_with_oracle_on_seeded_quivers():
    rng = random.Random(37)
    for _ in range(120):
        q = random_quiver(rng)
        assert is_path_reversible(q) == oracle_path_reversible(q, max_len=2)


def test_max_chain_agrees_with_oracle_on_seeded_quivers():
    rng = random.Random(53)
    compared = 0
    for _ in range(200):
        q = random_quiver(rng)
        c = classify_cycles(q)
        if not c.exclusive_condition:
            with pytest.raises(ExclusiveConditionError):
                oracle_max_chain(q)
            continue
        assert c.max_chain_length == oracle_max_chain(q)
        compared += 1
    assert compared >= 40  # the sample must actually exercise the agreement
