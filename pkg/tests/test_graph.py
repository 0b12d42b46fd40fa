"""
Tests for the bitmask graph core.
"""
import networkx as nx
import pytest
from hypothesis import given, settings

from tetrachrome.errors import UsageError
from tetrachrome.graph import (
    Graph,
    bits,
    common_neighbors,
    complement,
    complete_to,
    components,
    contract_parts,
    contract_set,
    expand_through,
    induced,
    is_clique,
    is_connected,
    is_independent,
    is_proper,
    set_neighbors,
    to_mask,
)
from tests.conftest import build, graphs, to_nx


# ============================================================================
# CONSTRUCTION
# ============================================================================

def test_from_edges_is_symmetric():
    g = build(3, [(0, 1), (1, 2)])
    assert g.adjacent(1, 0) and g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    assert g.edge_count == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_duplicate_edges_collapse():
    g = build(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(UsageError):
        build(3, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(UsageError):
        Graph(2, [0b10, 0])


def test_default_labels_are_one_based():
    assert build(3, []).labels == ("1", "2", "3")


# ============================================================================
# NEIGHBORHOODS
# ============================================================================

def test_set_neighbors_excludes_the_set(c7bar):
    xs = to_mask([0, 2])
    out = set_neighbors(c7bar, xs)
    assert not out & xs
    assert bits(out) == [3, 4, 5, 6]


def test_common_neighbors_on_antihole(c7bar):
    # v0 sees 2..5, v1 sees 3..6
    assert bits(common_neighbors(c7bar, 0, 1)) == [3, 4, 5]


def test_clique_and_independent(k4, c7bar):
    assert is_clique(k4, k4.vertices)
    assert is_clique(k4, 0)
    assert is_independent(c7bar, to_mask([0, 1]))
    assert not is_independent(c7bar, to_mask([0, 2]))
    assert complete_to(c7bar, 0, to_mask([2, 3, 4, 5]))
    assert not complete_to(c7bar, 0, to_mask([1, 2]))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(bits(c)) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
    assert is_connected(g) == nx.is_connected(to_nx(g))


# ============================================================================
# TRANSFORMATIONS
# ============================================================================

def test_induced_renumbers_and_keeps_labels(c7bar):
    sub, origin = induced(c7bar, to_mask([1, 3, 5]))
    assert sub.n == 3
    assert origin == ((1,), (3,), (5,))
    assert sub.labels == ("2", "4", "6")
    assert sub.adjacent(0, 1) and sub.adjacent(1, 2) and sub.adjacent(0, 2)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_complement_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(complement(g)), nx.complement(to_nx(g)))
    assert complement(complement(g)) == g


def test_contract_parts_order_and_adjacency():
    # path 0-1-2-3; merge {0, 2}
    g = build(4, [(0, 1), (1, 2), (2, 3)])
    reduced, origin = contract_parts(g, [to_mask([0, 2])])
    assert origin == ((1,), (3,), (0, 2))
    assert reduced.n == 3
    assert reduced.adjacent(0, 2) and reduced.adjacent(1, 2)
    assert not reduced.adjacent(0, 1)
    assert reduced.labels == ("2", "4", "1+3")


def test_contract_rejects_overlap_and_empty():
    g = build(3, [(0, 1)])
    with pytest.raises(UsageError):
        contract_parts(g, [0b011, 0b010])
    with pytest.raises(UsageError):
        contract_set(g, 0)


def test_expand_through_pulls_colors_back():
    g = build(4, [(0, 1), (1, 2), (2, 3)])
    _, origin = contract_parts(g, [to_mask([0, 2])])
    assert expand_through((2, 3, 1), origin, 4) == (1, 2, 1, 3)


# ============================================================================
# COLORING CHECKS
# ============================================================================

def test_is_proper_reports_first_problem(k4):
    assert is_proper(k4, (1, 2, 3, 4), require_total=True).ok
    assert is_proper(k4, (1, 2, 0, 0)).ok
    assert is_proper(k4, (1, 2, 0, 0), require_total=True).uncolored == 2
    assert is_proper(k4, (1, 1, 3, 4)).edge == (0, 1)
    assert is_proper(k4, (1, 2, 3, 5)).bad_color == 3


def test_is_proper_length_mismatch(k4):
    with pytest.raises(UsageError):
        is_proper(k4, (1, 2, 3))
