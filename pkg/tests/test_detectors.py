"""
Tests for induced-structure search and antihole classification.

networkx is the reference: induced subgraphs of every k-subset are
compared against path/cycle/complete graphs by isomorphism.
"""
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from tetrachrome.detectors import (
    FULL_PATTERN,
    antihole_verdict,
    assert_lemma1,
    check_clean,
    check_size,
    classify_attachment,
    complete_to_triangle,
    enumerate_antiholes,
    enumerate_cliques,
    enumerate_induced_cycles,
    enumerate_induced_paths,
    find_forbidden,
    interval,
    is_antihole,
    is_consecutive,
    is_free,
    is_induced_cycle,
    is_induced_path,
    longest_run,
    rotate,
)
from tetrachrome.errors import ContractViolation, ProblemSizeError
from tetrachrome.graph import to_mask
from tetrachrome.oracle import antihole
from tests.conftest import attached, build, graphs, to_nx


def _count_induced(g, template, k):
    h = to_nx(g)
    return sum(
        1 for subset in itertools.combinations(range(g.n), k)
        if nx.is_isomorphic(h.subgraph(subset), template)
    )


# ============================================================================
# PATHS, CYCLES, CLIQUES
# ============================================================================

@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_path_and_cycle_counts_match_networkx(g):
    # a 4-vertex set induces at most one P4 and one C4
    assert len(list(enumerate_induced_paths(g, 4))) == _count_induced(g, nx.path_graph(4), 4)
    assert len(list(enumerate_induced_cycles(g, 4))) == _count_induced(g, nx.cycle_graph(4), 4)
    assert len(list(enumerate_cliques(g, 3))) == _count_induced(g, nx.complete_graph(3), 3)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_witnesses_are_induced(g):
    for path in enumerate_induced_paths(g, 5):
        assert is_induced_path(g, path)
    for cycle in enumerate_induced_cycles(g, 5):
        assert is_induced_cycle(g, cycle)


def test_p6_found_on_path():
    g = build(6, [(i, i + 1) for i in range(5)])
    assert find_forbidden(g) == ("P6", [0, 1, 2, 3, 4, 5])


def test_c5_found_on_cycle():
    g = build(5, [(i, (i + 1) % 5) for i in range(5)])
    kind, witness = find_forbidden(g)
    assert kind == "C5"
    assert witness[0] == 0
    assert is_induced_cycle(g, witness)


def test_c7_contains_p6():
    g = build(7, [(i, (i + 1) % 7) for i in range(7)])
    assert not is_free(g)
    assert find_forbidden(g)[0] == "P6"


def test_antiholes_and_cliques_are_free(c7bar, c9bar, k5):
    for g in (c7bar, c9bar, k5):
        assert is_free(g)


def test_size_guard(monkeypatch):
    monkeypatch.setattr("tetrachrome.config.MAX_VERTICES", 5)
    g = build(6, [])
    with pytest.raises(ProblemSizeError):
        check_size(g)
    check_size(g, force=True)


# ============================================================================
# ANTIHOLES
# ============================================================================

def test_c7bar_has_one_antihole(c7bar):
    assert enumerate_antiholes(c7bar, 7) == [[0, 1, 2, 3, 4, 5, 6]]
    assert is_antihole(c7bar, list(range(7)))
    assert not is_antihole(c7bar, [0, 2, 1, 3, 4, 5, 6])


def test_c9bar_has_no_7_antihole(c9bar):
    # C_9 has no induced C_7
    assert enumerate_antiholes(c9bar, 7) == []
    assert enumerate_antiholes(c9bar, 9) == [list(range(9))]


def test_antihole_matches_networkx_complement():
    for k in (7, 9):
        assert nx.is_isomorphic(to_nx(antihole(k)), nx.complement(nx.cycle_graph(k)))


# ============================================================================
# PATTERNS
# ============================================================================

def test_pattern_helpers():
    assert interval(5, 3) == to_mask([5, 6, 0])
    assert is_consecutive(interval(6, 4))
    assert not is_consecutive(to_mask([0, 2]))
    assert longest_run(to_mask([6, 0, 1, 3])) == 3
    assert longest_run(FULL_PATTERN) == 7
    assert rotate(to_mask([2, 3]), 2) == to_mask([0, 1])


def test_triangle_patterns():
    # the 7-antihole triangles are triples pairwise at distance >= 2
    assert complete_to_triangle(to_mask([0, 2, 4]))
    assert not complete_to_triangle(interval(0, 4))
    assert complete_to_triangle(interval(0, 5))


# ============================================================================
# ATTACHMENTS
# ============================================================================

def test_classify_leaf_small_big():
    # 7 leaf at v0; 8 small on v0..v2 with a pendant 9; 10 big on v0..v4
    g = attached(4, [[0], [0, 1, 2], [], [0, 1, 2, 3, 4]], [(8, 9)])
    ctx = classify_attachment(g, range(7))
    assert ctx.x == to_mask([7, 8, 10])
    assert ctx.y == to_mask([9])
    assert ctx.z_at[0] == to_mask([7])
    assert ctx.small == to_mask([8])
    assert ctx.big == to_mask([10])
    assert ctx.s == to_mask([8])
    assert ctx.pattern(8) == interval(0, 3)


def test_classify_rejects_non_antihole(c7bar):
    with pytest.raises(ContractViolation):
        classify_attachment(c7bar, [0, 2, 1, 3, 4, 5, 6])


def test_attachment_properties_hold_on_free_graphs(twins_dirty, clique_boundary):
    for g in (twins_dirty, clique_boundary):
        assert assert_lemma1(classify_attachment(g, range(7))) == []


def test_attachment_properties_report_two_consecutive():
    # complete to v0, v1 only: property (1)
    g = attached(1, [[0, 1]])
    problems = assert_lemma1(classify_attachment(g, range(7)))
    assert any(p.startswith("(1)") for p in problems)
    assert not is_free(g)


# ============================================================================
# CLEAN CHECK
# ============================================================================

def test_k5_and_antihole9_rejected_first(k5, c9bar):
    assert check_clean(k5).verdict == "K5"
    report = check_clean(c9bar)
    assert report.verdict == "antihole9"
    assert report.evidence.witness == list(range(9))


def test_c1_vertex_complete_to_antihole():
    g = attached(1, [range(7)])
    report = check_clean(g)
    # clique number is 4, so the K5 check stays quiet
    assert report.verdict == "C1"
    assert report.evidence.witness == [7]


def test_c2_two_six_patterns():
    # non-adjacent, or 7, 8 and v1, v3, v5 would form a K5
    g = attached(2, [range(0, 6), range(1, 7)])
    report = check_clean(g)
    assert report.verdict == "C2"
    assert report.evidence.witness == [7, 8]


def test_bare_antihole_is_clean(c7bar):
    report = check_clean(c7bar)
    assert report.is_clean
    assert [r.verdict for r in report.records] == ["clean"]


def test_dirty_component(twins_dirty):
    ctx = classify_attachment(twins_dirty, range(7))
    record = antihole_verdict(twins_dirty, ctx)
    assert record.verdict == "dirty"
    assert record.witness == [9, 10]


def test_clique_boundary_passes(clique_boundary):
    ctx = classify_attachment(clique_boundary, range(7))
    assert antihole_verdict(clique_boundary, ctx).verdict == "clean"
