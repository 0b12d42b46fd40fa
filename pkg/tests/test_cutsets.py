"""
Tests for clique-cutset decomposition and chromatic cutsets.
"""
import pytest
from hypothesis import assume, given, settings

from tetrachrome.cutsets import (
    ChromaticPartition,
    claim_x2_holds,
    clique_cutset_decompose,
    contract_chromatic,
    find_chromatic_partition,
    has_clique_cutset,
    verify_partition,
)
from tetrachrome.detectors import classify_attachment, is_free
from tetrachrome.errors import ContractViolation, InputNotFreeError, UsageError
from tetrachrome.graph import bits, induced, is_clique, is_connected, is_proper, to_mask
from tetrachrome.oracle import brute_k_colorable
from tetrachrome.pipeline import expand
from tests.conftest import attached, build, graphs


def _bowtie():
    return build(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


# ============================================================================
# CLIQUE CUTSETS
# ============================================================================

def test_bowtie_splits_at_shared_vertex():
    tree = clique_cutset_decompose(_bowtie())
    assert sorted(bits(a) for a in tree.atoms) == [[0, 1, 2], [2, 3, 4]]
    assert tree.separators[tree.root] == 0
    assert [bits(s) for i, s in enumerate(tree.separators) if i != tree.root] == [[2]]


def test_single_atoms(k4, c7bar):
    for g in (k4, c7bar):
        tree = clique_cutset_decompose(g)
        assert tree.atoms == (g.vertices,)
        assert tree.parents == (None,)
    assert has_clique_cutset(c7bar) is None


def test_disconnected_input_rejected():
    with pytest.raises(UsageError):
        clique_cutset_decompose(build(2, []))


def test_glue_order_puts_parents_first():
    tree = clique_cutset_decompose(build(4, [(0, 1), (1, 2), (2, 3)]))
    order = tree.glue_order()
    assert order[0] == tree.root
    for position, i in enumerate(order):
        if tree.parents[i] is not None:
            assert tree.parents[i] in order[:position]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_atoms_have_no_clique_cutset(g):
    assume(is_connected(g))
    tree = clique_cutset_decompose(g)
    covered = 0
    for i, atom in enumerate(tree.atoms):
        covered |= atom
        assert has_clique_cutset(g, atom) is None
        sep = tree.separators[i]
        assert is_clique(g, sep)
        assert sep & ~atom == 0
        if tree.parents[i] is not None:
            assert sep & ~tree.atoms[tree.parents[i]] == 0
    assert covered == g.vertices
    assert len(tree.atoms) <= g.n


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_colorable_iff_atoms_colorable(g):
    assume(is_connected(g))
    tree = clique_cutset_decompose(g)
    whole = brute_k_colorable(g, 3) is not None
    pieces = all(brute_k_colorable(induced(g, a)[0], 3) is not None for a in tree.atoms)
    assert whole == pieces


# ============================================================================
# CHROMATIC CUTSETS
# ============================================================================

def test_twins_form_one_part(twins_dirty):
    ctx = classify_attachment(twins_dirty, range(7))
    p = find_chromatic_partition(twins_dirty, ctx, to_mask([9, 10]))
    assert p.s == to_mask([7, 8])
    assert p.parts == (to_mask([7, 8]),)
    assert p.k_prime & ctx.c_mask == ctx.c_mask
    assert verify_partition(twins_dirty, p) == []


def test_contraction_of_twins(twins_dirty):
    ctx = classify_attachment(twins_dirty, range(7))
    p = find_chromatic_partition(twins_dirty, ctx, to_mask([9, 10]))
    reduced, record = contract_chromatic(twins_dirty, p, ctx.c)
    assert reduced.n == twins_dirty.n - 1
    assert record.new_ids == (9,)
    assert record.origin[9] == (7, 8)
    assert bits(reduced.rows[9]) == [1, 2, 3, 4, 5, 7]
    assert is_free(reduced)


def test_expansion_through_twins(twins_dirty):
    ctx = classify_attachment(twins_dirty, range(7))
    p = find_chromatic_partition(twins_dirty, ctx, to_mask([9, 10]))
    reduced, record = contract_chromatic(twins_dirty, p, ctx.c)
    coloring = brute_k_colorable(reduced, 4)
    assert coloring is not None
    assert is_proper(twins_dirty, expand(coloring, [record]), require_total=True).ok


def test_six_neighbor_branch(six_dirty):
    ctx = classify_attachment(six_dirty, range(7))
    p = find_chromatic_partition(six_dirty, ctx, to_mask([9, 10]))
    # both twins miss v0, the only vertex of color 1 in the forced coloring
    assert p.parts == (to_mask([7, 8]),)


def test_clique_boundary_is_not_dirty(clique_boundary):
    ctx = classify_attachment(clique_boundary, range(7))
    with pytest.raises(ContractViolation) as info:
        find_chromatic_partition(clique_boundary, ctx, to_mask([9]))
    assert info.value.claim == "dirty"


def test_partial_component_rejected(twins_dirty):
    ctx = classify_attachment(twins_dirty, range(7))
    with pytest.raises(ContractViolation):
        find_chromatic_partition(twins_dirty, ctx, to_mask([9]))


def test_incomparable_non_adjacent_pair_fails_x2():
    g = attached(4, [range(1, 6), range(2, 7), [], []], [(7, 9), (8, 9), (9, 10)])
    ctx = classify_attachment(g, range(7))
    assert not claim_x2_holds(ctx, 7, 8)
    with pytest.raises(InputNotFreeError) as info:
        find_chromatic_partition(g, ctx, to_mask([9, 10]))
    assert info.value.claim == "x2"
    assert not is_free(g)


def test_verify_partition_reports_problems(twins_dirty):
    bad = ChromaticPartition(s=to_mask([7, 8]), parts=(to_mask([7]),), k=to_mask([9, 10]), k_prime=0)
    problems = verify_partition(twins_dirty, bad)
    assert "parts do not cover S exactly" in problems
    with pytest.raises(ContractViolation):
        contract_chromatic(twins_dirty, bad)
