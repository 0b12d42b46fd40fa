"""
Tests for Phase I cleaning.
"""
import random

import pytest

from tetrachrome.graph import is_proper
from tetrachrome.models import GenSpec
from tetrachrome.oracle import brute_k_colorable, generate_free
from tetrachrome.phase1 import clean_loop, clean_step
from tetrachrome.pipeline import expand
from tetrachrome.trace import TraceLog
from tests.conftest import build


def _k5_with_pendant():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    return build(6, edges + [(4, 5)])


def test_k5_is_rejected():
    trace = TraceLog()
    outcome = clean_step(_k5_with_pendant(), trace=trace)
    assert outcome.kind == "not_colorable"
    assert outcome.evidence.kind == "K5"
    assert sorted(outcome.evidence.witness) == [0, 1, 2, 3, 4]
    assert trace.lines() == ["phase1.reject evidence=K5 witness=[1,2,3,4,5]"]


def test_bare_antihole_is_clean(c7bar):
    outcome = clean_step(c7bar)
    assert outcome.kind == "clean"
    assert outcome.graph is c7bar
    assert outcome.record is None


def test_twins_are_contracted(twins_dirty):
    trace = TraceLog()
    outcome = clean_step(twins_dirty, trace=trace)
    assert outcome.kind == "reduced"
    assert outcome.graph.n == 10
    assert outcome.record.new_ids == (9,)
    assert trace.kinds() == ["phase1.step"]


def test_loop_until_clean(twins_dirty):
    outcome, journal = clean_loop(twins_dirty)
    assert outcome.kind == "clean"
    assert len(journal) == 1
    coloring = brute_k_colorable(outcome.graph, 4)
    assert is_proper(twins_dirty, expand(coloring, journal), require_total=True).ok


def test_loop_stops_on_rejection(k5):
    outcome, journal = clean_loop(k5)
    assert outcome.kind == "not_colorable"
    assert journal == []


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(30))
def test_cleaning_preserves_colorability(seed):
    rng = random.Random(seed)
    g = generate_free(GenSpec(n=rng.randint(8, 13), p=rng.uniform(0.3, 0.8), seed=seed, preset="antihole7-attached"))
    outcome, journal = clean_loop(g)
    expected = brute_k_colorable(g, 4)
    if outcome.kind == "not_colorable":
        assert expected is None
        return
    reduced = brute_k_colorable(outcome.graph, 4)
    assert (expected is None) == (reduced is None)
    if reduced is not None:
        assert is_proper(g, expand(reduced, journal), require_total=True).ok
