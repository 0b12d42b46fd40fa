"""
Tests for nice colorings and their completion.
"""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetrachrome.errors import InputNotFreeError, NiceColoringError
from tetrachrome.graph import is_proper
from tetrachrome.models import GenSpec
from tetrachrome.nice import check_nice, nice_complete, nice_split
from tetrachrome.oracle import brute_k_colorable, generate_free
from tests.conftest import build


def test_total_coloring_is_returned_unchanged(k4):
    assert nice_complete(k4, (1, 2, 3, 4)) == (1, 2, 3, 4)


def test_star_center():
    star = build(3, [(0, 1), (0, 2)])
    assert nice_split(star, (0, 1, 2), 0) == (0b110, 1)
    assert nice_complete(star, (0, 1, 2)) == (1, 2, 2)


def test_free_color_is_used_directly():
    star = build(3, [(0, 1), (0, 2)])
    assert nice_complete(star, (0, 2, 3)) == (1, 2, 3)


def test_adjacent_uncolored_vertices_violate_n1():
    with pytest.raises(NiceColoringError) as info:
        nice_complete(build(2, [(0, 1)]), (0, 0))
    assert info.value.claim == "N1"


def test_both_sides_with_edges_violate_n2():
    g = build(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    assert check_nice(g, (0, 1, 2, 3, 4)) == ["N2: neither side of N(0) is independent"]
    with pytest.raises(NiceColoringError) as info:
        nice_complete(g, (0, 1, 2, 3, 4))
    assert info.value.claim == "N2"


def test_swap_chain_through_c5_is_reported():
    c5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    with pytest.raises(InputNotFreeError) as info:
        nice_complete(c5, (0, 1, 2, 1, 2))
    assert info.value.witness == (0, 1, 2, 3, 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_nice_colorings_of_free_graphs_complete(seed):
    rng = random.Random(seed)
    g = generate_free(GenSpec(n=rng.randint(5, 10), p=rng.uniform(0.3, 0.7), seed=seed))
    total = brute_k_colorable(g, 4)
    if total is None:
        return
    # uncolor a random independent set
    partial = list(total)
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        if rng.random() < 0.5 and all(partial[u] != 0 for u in range(g.n) if g.adjacent(u, v)):
            partial[v] = 0
    if check_nice(g, partial):
        return
    out = nice_complete(g, partial)
    assert is_proper(g, out, require_total=True).ok
