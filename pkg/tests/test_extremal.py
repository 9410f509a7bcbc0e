"""Extremal 2-reachable sets: clique solver vs brute oracle, sharpness."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import colorings
from partycover.extremal import (
    BRUTE_FORCE_MAX_N,
    brute_max_2reachable,
    build_sharp_example,
    max_2reachable,
    reach_adjacency,
)
from partycover.graphs import (
    BLUE,
    RED,
    all_red,
    enumerate_colorings,
    from_red_mask,
    vertex_list,
    vertex_mask,
)
from partycover.reach import dist_le2, is_2reachable_set


def test_reach_adjacency_definition():
    g = build_sharp_example(6)
    for c in (RED, BLUE):
        adj = reach_adjacency(g, c)
        for u in range(6):
            assert not (adj[u] >> u) & 1
            for v in range(6):
                if v != u:
                    assert bool((adj[u] >> v) & 1) == dist_le2(g, c, u, v)
            for v in vertex_list(adj[u]):
                assert (adj[v] >> u) & 1  # symmetric


def test_all_red_whole_set():
    g = all_red(6)
    size, members = max_2reachable(g, RED)
    assert size == 6 and members == 0b111111
    assert brute_max_2reachable(g, RED) == 6
    size_b, members_b = max_2reachable(g, BLUE)
    assert size_b == 1 and members_b == 1  # no blue edges at all


def test_n2_singletons():
    g = from_red_mask(2, 0)
    for c in (RED, BLUE):
        assert max_2reachable(g, c) == (1, 0b01)
        assert brute_max_2reachable(g, c) == 1


def test_solver_matches_oracle_exhaustively_n4():
    for g in enumerate_colorings(4):
        for c in (RED, BLUE):
            size, members = max_2reachable(g, c)
            assert size == brute_max_2reachable(g, c)
            assert is_2reachable_set(g, c, members)
            assert members.bit_count() == size


@given(colorings(min_n=6, max_n=10), st.sampled_from((RED, BLUE)))
@settings(max_examples=60)
def test_solver_matches_oracle_random(g, c):
    size, members = max_2reachable(g, c)
    assert size == brute_max_2reachable(g, c)
    assert is_2reachable_set(g, c, members)
    assert members.bit_count() == size


def test_witness_is_lex_smallest_n4():
    for g in enumerate_colorings(4):
        for c in (RED, BLUE):
            size, members = max_2reachable(g, c)
            best = min(
                sorted(combo)
                for combo in itertools.combinations(range(4), size)
                if is_2reachable_set(g, c, vertex_mask(combo)))
            assert vertex_list(members) == best


def test_sharp_example_maxima():
    for n in (4, 6, 8, 10, 12):
        g = build_sharp_example(n)
        for c in (RED, BLUE):
            assert max_2reachable(g, c)[0] == n // 2


def test_sharp_example_witnesses():
    g = build_sharp_example(8)
    assert max_2reachable(g, RED) == (4, vertex_mask([0, 2, 4, 6]))
    assert max_2reachable(g, BLUE) == (4, vertex_mask([0, 2, 4, 6]))
    g4 = build_sharp_example(4)
    assert max_2reachable(g4, RED) == (2, vertex_mask([0, 2]))
    assert max_2reachable(g4, BLUE) == (2, vertex_mask([0, 3]))


def test_sharp_example_oracle_n12():
    assert brute_max_2reachable(build_sharp_example(12), RED) == 6


def test_sharp_partner_pairs_critical_both_colors():
    g = build_sharp_example(10)
    for u in range(0, 10, 2):
        for c in (RED, BLUE):
            assert not dist_le2(g, c, u, u + 1)


def test_sharp_every_larger_subset_contains_partner_pair():
    # pigeonhole at n=8: 5 vertices among 4 partner pairs
    n = 8
    for combo in itertools.combinations(range(n), n // 2 + 1):
        assert any((u ^ 1) in combo for u in combo)


def test_brute_refuses_large_n():
    g = build_sharp_example(18)
    with pytest.raises(ValueError, match="brute-force bound"):
        brute_max_2reachable(g, RED)
    assert BRUTE_FORCE_MAX_N == 16
    # explicit override is allowed
    assert brute_max_2reachable(build_sharp_example(4), RED, max_n=4) == 2


def test_build_sharp_example_rejects_bad_n():
    with pytest.raises(ValueError):
        build_sharp_example(5)
    with pytest.raises(ValueError):
        build_sharp_example(0)


@given(colorings(max_n=10), st.sampled_from((RED, BLUE)))
@settings(max_examples=60)
def test_max_at_least_half_when_solver_says_so(g, c):
    """The cover construction guarantees one part of size >= n/2, so the
    color carrying it has a 2-reachable set that large; the extremal
    solver can never report less than what any cover part achieves."""
    from partycover.cover import solve
    cov = solve(g)
    size_by_color = {RED: 0, BLUE: 0}
    for members, col in ((cov.a, cov.color_a), (cov.b, cov.color_b)):
        size_by_color[col] = max(size_by_color[col], members.bit_count())
    if size_by_color[c]:
        assert max_2reachable(g, c)[0] >= size_by_color[c]
