"""
Shared fixtures: the named graphs most tests talk about.

Antiholes use vertices 0..6 in cyclic order, so v_i v_j is an edge
exactly when i and j are at cyclic distance at least 2.
"""
import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from tetrachrome.graph import Graph
from tetrachrome.oracle import antihole


def build(n, edges):
    return Graph.from_edges(n, edges)


def antihole_edges():
    return list(antihole(7).edges())


def attached(extra, attachments, more_edges=()):
    """A 7-antihole plus `extra` vertices; attachments[k] lists the C-positions of vertex 7 + k."""
    edges = antihole_edges()
    for k, positions in enumerate(attachments):
        edges.extend((i, 7 + k) for i in positions)
    edges.extend(more_edges)
    return build(7 + extra, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, max_n=9):
    """Arbitrary small graphs."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build(n, chosen)


@pytest.fixture
def c7bar():
    return antihole(7)


@pytest.fixture
def c9bar():
    return antihole(9)


@pytest.fixture
def k5():
    return build(5, itertools.combinations(range(5), 2))


@pytest.fixture
def k4():
    return build(4, itertools.combinations(range(4), 2))


@pytest.fixture
def twins_dirty():
    """
    Twins 7, 8 see v1..v5; 9 sees both twins and the pendant 10.
    K = {9, 10} is a dirty component whose neighborhood {7, 8} is one
    part of a chromatic cutset.
    """
    return attached(4, [range(1, 6), range(1, 6), [], []], [(7, 9), (8, 9), (9, 10)])


@pytest.fixture
def six_dirty():
    """Like twins_dirty, with the twins seeing v1..v6."""
    return attached(4, [range(1, 7), range(1, 7), [], []], [(7, 9), (8, 9), (9, 10)])


@pytest.fixture
def clique_boundary():
    """7 sees v1..v5, 8 sees v2..v6, 7-8 an edge; both see the pendant 9. N(9) is a clique."""
    return attached(3, [range(1, 6), range(2, 7), []], [(7, 8), (7, 9), (8, 9)])
