"""
Graph Core

Immutable simple undirected graphs with dense vertex ids 0..n-1 and
bitset adjacency rows. A vertex set is a plain Python int used as a
bitmask; bit v set means vertex v is a member.

WHY BITSETS?
- The structure detectors spend nearly all their time intersecting
  neighborhoods; `rows[u] & rows[v]` is one machine-level operation
  per word instead of a Python-level loop.
- Masks are hashable and immutable, so they can be cached and shared
  between threads freely.

Every transformation (induced subgraph, contraction) returns a new
graph plus an origin table: origin[new_id] is the tuple of parent ids
that the new vertex stands for. Colorings are pulled back through these
tables by `expand_through`.
"""
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from tetrachrome.errors import UsageError

VertexSet = int
Coloring = Tuple[int, ...]
Origin = Tuple[Tuple[int, ...], ...]

UNCOLORED = 0


# ============================================================================
# BIT HELPERS
# ============================================================================

def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_size(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Smallest member of a non-empty mask."""
    return (mask & -mask).bit_length() - 1


def bits(mask: int) -> List[int]:
    return list(iter_bits(mask))


# ============================================================================
# GRAPH
# ============================================================================

class Graph:
    """
    Simple undirected graph over vertices 0..n-1.

    Args:
        n: vertex count
        rows: rows[v] is the neighbor mask of v
        labels: optional provenance strings, one per vertex

    Raises:
        UsageError: if the rows are not symmetric, contain a self-loop,
            or point outside 0..n-1
    """

    __slots__ = ("n", "rows", "_labels")

    def __init__(self, n: int, rows: Sequence[int], labels: Optional[Sequence[str]] = None):
        if len(rows) != n:
            raise UsageError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise UsageError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if row >> v & 1:
                raise UsageError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise UsageError(f"adjacency not symmetric at edge {v}-{u}")
        if labels is not None and len(labels) != n:
            raise UsageError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.rows: Tuple[int, ...] = tuple(rows)
        self._labels: Optional[Tuple[str, ...]] = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def labels(self) -> Tuple[str, ...]:
        if self._labels is None:
            return tuple(str(v + 1) for v in range(self.n))
        return self._labels

    def label(self, v: int) -> str:
        return self.labels[v]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise UsageError(f"vertex {v} out of range for graph on {g.n} vertices")


def _check_set(g: Graph, xs: int) -> None:
    if xs < 0 or xs >> g.n:
        raise UsageError(f"vertex set reaches outside 0..{g.n - 1}")


# ============================================================================
# NEIGHBORHOODS
# ============================================================================

def neighbors(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.rows[v]


def set_neighbors(g: Graph, xs: int) -> int:
    """N(X): vertices outside X with a neighbor in X."""
    _check_set(g, xs)
    out = 0
    for v in iter_bits(xs):
        out |= g.rows[v]
    return out & ~xs


def common_neighbors(g: Graph, u: int, v: int) -> int:
    return g.rows[u] & g.rows[v]


def is_clique(g: Graph, xs: int) -> bool:
    for v in iter_bits(xs):
        if (xs & ~(1 << v)) & ~g.rows[v]:
            return False
    return True


def is_independent(g: Graph, xs: int) -> bool:
    for v in iter_bits(xs):
        if g.rows[v] & xs:
            return False
    return True


def complete_to(g: Graph, v: int, xs: int) -> bool:
    """True when v is adjacent to every member of xs."""
    return xs & ~g.rows[v] == 0


# ============================================================================
# TRANSFORMATIONS
# ============================================================================

def induced(g: Graph, xs: int) -> Tuple[Graph, Origin]:
    """
    Subgraph induced by xs, with vertices renumbered in increasing order.

    Returns:
        (subgraph, origin) where origin[i] == (old_id,) for new id i
    """
    _check_set(g, xs)
    old_ids = bits(xs)
    index = {old: new for new, old in enumerate(old_ids)}
    rows = []
    for old in old_ids:
        row = 0
        for u in iter_bits(g.rows[old] & xs):
            row |= 1 << index[u]
        rows.append(row)
    parent_labels = g.labels
    labels = [parent_labels[old] for old in old_ids]
    return Graph(len(old_ids), rows, labels), tuple((old,) for old in old_ids)


def complement(g: Graph) -> Graph:
    full = g.vertices
    rows = [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    return Graph(g.n, rows, g._labels)


def contract_parts(g: Graph, parts: Sequence[int]) -> Tuple[Graph, Origin]:
    """
    Contract each of the disjoint non-empty sets in `parts` to one vertex.

    Surviving vertices keep their relative order and come first; the new
    vertices s_1..s_t follow in the order of `parts`. The neighborhood of
    s_i is N(parts[i]) with other parts collapsed to their own new vertex.

    Raises:
        UsageError: on an empty or overlapping part
    """
    seen = 0
    for part in parts:
        _check_set(g, part)
        if part == 0:
            raise UsageError("cannot contract an empty vertex set")
        if part & seen:
            raise UsageError("contracted sets must be disjoint")
        seen |= part
    survivors = bits(g.vertices & ~seen)
    origin: Origin = tuple((v,) for v in survivors) + tuple(tuple(iter_bits(p)) for p in parts)
    new_of = [0] * g.n
    for new, olds in enumerate(origin):
        for old in olds:
            new_of[old] = new
    rows = [0] * len(origin)
    for u, v in g.edges():
        a, b = new_of[u], new_of[v]
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    parent_labels = g.labels
    labels = ["+".join(parent_labels[o] for o in olds) for olds in origin]
    return Graph(len(origin), rows, labels), origin


def contract_set(g: Graph, s: int) -> Tuple[Graph, Origin]:
    """Replace s by a single new vertex (the last id) whose neighborhood is N(s)."""
    if s == 0:
        raise UsageError("cannot contract an empty vertex set")
    return contract_parts(g, [s])


def expand_through(coloring: Sequence[int], origin: Origin, parent_n: int) -> Coloring:
    """Pull a coloring of a derived graph back to its parent through `origin`."""
    out = [UNCOLORED] * parent_n
    for new, olds in enumerate(origin):
        for old in olds:
            out[old] = coloring[new]
    return tuple(out)


# ============================================================================
# CONNECTIVITY
# ============================================================================

def components(g: Graph, within: Optional[int] = None) -> List[int]:
    """
    Connected components of G[within], ordered by their lowest vertex.
    """
    if within is None:
        within = g.vertices
    _check_set(g, within)
    out = []
    remaining = within
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= g.rows[v]
            frontier = grown & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph, within: Optional[int] = None) -> bool:
    return len(components(g, within)) <= 1


# ============================================================================
# COLORING CHECKS
# ============================================================================

class ProperCheck(NamedTuple):
    ok: bool
    edge: Optional[Tuple[int, int]] = None
    uncolored: Optional[int] = None
    bad_color: Optional[int] = None


def is_proper(g: Graph, c: Sequence[int], require_total: bool = False, k: int = 4) -> ProperCheck:
    """
    Check a (partial) coloring.

    Reports the first vertex with a color outside 0..k, then the first
    monochromatic edge in lexicographic order, then (with require_total)
    the first uncolored vertex.
    """
    if len(c) != g.n:
        raise UsageError(f"coloring has {len(c)} entries, graph has {g.n} vertices")
    for v, color in enumerate(c):
        if not 0 <= color <= k:
            return ProperCheck(False, bad_color=v)
    for u, v in g.edges():
        if c[u] != UNCOLORED and c[u] == c[v]:
            return ProperCheck(False, edge=(u, v))
    if require_total:
        for v, color in enumerate(c):
            if color == UNCOLORED:
                return ProperCheck(False, uncolored=v)
    return ProperCheck(True)
