"""
Cutsets

Two kinds of separating sets drive the solver:

CLIQUE CUTSETS:
`clique_cutset_decompose` splits a connected graph into atoms (induced
pieces without a clique cutset). It computes a minimal elimination
ordering with MCS-M, remembers the vertices whose label did not grow
(they generate the minimal separators of the triangulation), and peels
off one atom per generator whose separator is a clique in G.

CHROMATIC CUTSETS:
Around a dirty 7-antihole, S = N(K) for the offending component K is a
complete multipartite set whose parts are forced monochromatic in every
4-coloring. `find_chromatic_partition` builds that partition and
`contract_chromatic` replaces every part by one vertex.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from tetrachrome.detectors import (
    ANTIHOLE,
    FULL_PATTERN,
    AntiholeContext,
    has_bit,
    is_consecutive,
    longest_run,
)
from tetrachrome.errors import ContractViolation, InputNotFreeError, UsageError
from tetrachrome.graph import (
    Graph,
    Origin,
    components,
    contract_parts,
    is_clique,
    is_connected,
    is_independent,
    iter_bits,
    lowest,
    set_neighbors,
)

log = logging.getLogger("tetrachrome.cutsets")


# ============================================================================
# CLIQUE-CUTSET DECOMPOSITION
# ============================================================================

@dataclass(frozen=True)
class DecompositionTree:
    """
    Atoms in extraction order; the last atom is the root.

    separators[i] is the clique shared by atom i and its parent
    parents[i]; the root has separator 0 and parent None.
    """

    atoms: Tuple[int, ...]
    separators: Tuple[int, ...]
    parents: Tuple[Optional[int], ...]

    @property
    def root(self) -> int:
        return len(self.atoms) - 1

    def glue_order(self) -> List[int]:
        """Root first; every atom after its parent."""
        return list(range(len(self.atoms) - 1, -1, -1))


def _mcs_m(g: Graph) -> Tuple[List[int], List[int], List[int]]:
    """
    Maximum cardinality search for minimal triangulation.

    Returns:
        (alpha, h_rows, generators): alpha[v] is the elimination number
        (1..n), h_rows the triangulated adjacency, generators the vertices
        in numbering order whose label did not exceed the previous one.
    """
    n = g.n
    labels = [0] * n
    alpha = [0] * n
    h_rows = list(g.rows)
    unnumbered = g.vertices
    generators = []
    previous = -1
    for number in range(n, 0, -1):
        best = max(labels[v] for v in iter_bits(unnumbered))
        x = next(v for v in iter_bits(unnumbered) if labels[v] == best)
        if labels[x] <= previous:
            generators.append(x)
        previous = labels[x]
        unnumbered &= ~(1 << x)

        hits = []
        for y in iter_bits(unnumbered):
            through = 0
            for w in iter_bits(unnumbered):
                if labels[w] < labels[y]:
                    through |= 1 << w
            reach = frontier = 1 << x
            while frontier:
                grown = 0
                for w in iter_bits(frontier):
                    grown |= g.rows[w]
                if grown >> y & 1:
                    hits.append(y)
                    break
                frontier = grown & through & ~reach
                reach |= frontier
        for y in hits:
            labels[y] += 1
            h_rows[x] |= 1 << y
            h_rows[y] |= 1 << x
        alpha[x] = number
    return alpha, h_rows, generators


def clique_cutset_decompose(g: Graph) -> DecompositionTree:
    """
    Decompose a connected graph into atoms by clique minimal separators.

    Raises:
        UsageError: if g is disconnected
    """
    if not is_connected(g):
        raise UsageError("clique-cutset decomposition needs a connected graph")
    if g.n == 0:
        return DecompositionTree((0,), (0,), (None,))

    alpha, h_rows, generators = _mcs_m(g)
    higher = [0] * g.n
    for v in range(g.n):
        for w in range(g.n):
            if alpha[w] > alpha[v]:
                higher[v] |= 1 << w

    atoms: List[int] = []
    separators: List[int] = []
    remaining = g.vertices
    for x in sorted(generators, key=lambda v: alpha[v]):
        sep = h_rows[x] & higher[x]
        if not remaining >> x & 1 or sep & ~remaining or not is_clique(g, sep):
            continue
        piece = next(c for c in components(g, remaining & ~sep) if c >> x & 1)
        if piece | sep == remaining:
            continue
        atoms.append(piece | sep)
        separators.append(sep)
        remaining &= ~piece
        log.debug("atom %s split off by separator %s", list(iter_bits(piece | sep)), list(iter_bits(sep)))
    atoms.append(remaining)
    separators.append(0)

    parents: List[Optional[int]] = []
    for i, sep in enumerate(separators):
        if i == len(atoms) - 1:
            parents.append(None)
            continue
        parents.append(next(j for j in range(i + 1, len(atoms)) if sep & ~atoms[j] == 0))
    return DecompositionTree(tuple(atoms), tuple(separators), tuple(parents))


def has_clique_cutset(g: Graph, within: Optional[int] = None) -> Optional[int]:
    """
    Brute force: a clique Q of G[within] whose removal disconnects
    G[within], or None. Exponential; meant for small test graphs.
    """
    if within is None:
        within = g.vertices

    def cliques(chosen: int, cands: int):
        yield chosen
        for v in iter_bits(cands):
            yield from cliques(chosen | 1 << v, cands & g.rows[v] & ~((1 << (v + 1)) - 1))

    for q in cliques(0, within):
        rest = within & ~q
        if rest and len(components(g, rest)) > 1:
            return q
    return None


# ============================================================================
# CHROMATIC PARTITIONS
# ============================================================================

@dataclass(frozen=True)
class ChromaticPartition:
    """
    S split into independent, pairwise complete parts.

    k and k_prime are two components of G - S that every vertex of S
    sees (the minimal-separator witness).
    """

    s: int
    parts: Tuple[int, ...]
    k: int
    k_prime: int


@dataclass(frozen=True)
class ContractionRecord:
    """
    One Phase I reduction. origin maps ids of the reduced graph back to
    the parent graph; new_ids are the contracted vertices s_1..s_t.
    """

    partition: ChromaticPartition
    origin: Origin
    new_ids: Tuple[int, ...]
    parent_n: int
    antihole: Tuple[int, ...] = ()


def verify_partition(g: Graph, p: ChromaticPartition) -> List[str]:
    """Every broken invariant of p, as readable strings; empty when valid."""
    problems = []
    union = 0
    for i, part in enumerate(p.parts):
        if part == 0:
            problems.append(f"part {i} is empty")
        if part & union:
            problems.append(f"part {i} overlaps an earlier part")
        union |= part
        if not is_independent(g, part):
            problems.append(f"part {i} is not independent")
    if union != p.s:
        problems.append("parts do not cover S exactly")
    for (i, a), (j, b) in itertools.combinations(enumerate(p.parts), 2):
        for v in iter_bits(a):
            if b & ~g.rows[v]:
                problems.append(f"parts {i} and {j} are not complete to each other")
                break
    pieces = components(g, g.vertices & ~p.s)
    if p.k not in pieces or p.k_prime not in pieces or p.k == p.k_prime:
        problems.append("separator witness is not two distinct components of G - S")
    else:
        for v in iter_bits(p.s):
            if not (g.rows[v] & p.k and g.rows[v] & p.k_prime):
                problems.append(f"vertex {v} of S misses one side of the separator")
                break
    return problems


def claim_x2_holds(ctx: AntiholeContext, u1: int, u2: int) -> bool:
    """Non-adjacent exactly when the attachment patterns on C are nested."""
    p1, p2 = ctx.pattern(u1), ctx.pattern(u2)
    nested = p1 & ~p2 == 0 or p2 & ~p1 == 0
    return ctx.g.adjacent(u1, u2) != nested


# color of C position r after rotating the 6-neighbor vertex's gap to 0
_FORCED_COLORS = (1, 2, 2, 3, 3, 4, 4)


def find_chromatic_partition(g: Graph, ctx: AntiholeContext, k: int) -> ChromaticPartition:
    """
    Partition S = N(K) for a dirty component K of G - (C ∪ N(C)).

    If every vertex of S has exactly 5 neighbors on C, parts are the
    classes of equal C-neighborhood. Otherwise some u has 6 neighbors
    on C; C is then colored v0 -> 1, v1,v2 -> 2, v3,v4 -> 3, v5,v6 -> 4
    with v0 the vertex u misses, and part i holds the vertices of S with
    no C-neighbor of color i.

    Raises:
        ContractViolation: K is not a dirty component, or the resulting
            partition breaks an invariant
        InputNotFreeError: a structural claim fails, so the graph has
            an induced P6 or C5
    """
    if k == 0 or k & ~ctx.y or not is_connected(g, k) or set_neighbors(g, k) & ctx.y:
        raise ContractViolation("K is not a component of G - (C ∪ N(C))", claim="dirty")
    s = set_neighbors(g, k)
    if is_clique(g, s):
        raise ContractViolation("N(K) is a clique", claim="dirty")

    for u in iter_bits(s):
        p = ctx.pattern(u)
        if not is_consecutive(p) or longest_run(p) < 5:
            raise InputNotFreeError(f"vertex {u} of S has fewer than 5 consecutive neighbors on C",
                                    claim="x1", witness=[u])
    for u1, u2 in itertools.combinations(iter_bits(s), 2):
        if not claim_x2_holds(ctx, u1, u2):
            raise InputNotFreeError(f"vertices {u1},{u2} of S break the adjacency/nesting rule",
                                    claim="x2", witness=[u1, u2])

    sizes = {ctx.pattern(u).bit_count() for u in iter_bits(s)}
    if sizes == {5}:
        claim = "x3"
        classes = {}
        for u in iter_bits(s):
            classes[ctx.pattern(u)] = classes.get(ctx.pattern(u), 0) | 1 << u
        parts = sorted(classes.values(), key=lowest)
    else:
        claim = "x4"
        anchor = next(u for u in iter_bits(s) if ctx.pattern(u).bit_count() >= 6)
        if ctx.pattern(anchor) == FULL_PATTERN:
            raise ContractViolation(f"vertex {anchor} is complete to C", claim="x4")
        gap = lowest(FULL_PATTERN & ~ctx.pattern(anchor))
        by_color = [0] * 5
        for u in iter_bits(s):
            seen = {_FORCED_COLORS[(i - gap) % ANTIHOLE] for i in range(ANTIHOLE) if has_bit(ctx.pattern(u), i)}
            missing = [color for color in (1, 2, 3, 4) if color not in seen]
            if len(missing) != 1:
                raise InputNotFreeError(f"vertex {u} of S misses {len(missing)} colors of C",
                                        claim="x4", witness=[u])
            by_color[missing[0]] |= 1 << u
        parts = [part for part in by_color[1:] if part]

    k_prime = next(c for c in components(g, g.vertices & ~s) if c >> ctx.c[0] & 1)
    partition = ChromaticPartition(s, tuple(parts), k, k_prime)
    problems = verify_partition(g, partition)
    if problems:
        raise ContractViolation("; ".join(problems), claim=claim)
    log.debug("chromatic cutset via %s: %d parts over %d vertices", claim, len(parts), s.bit_count())
    return partition


def contract_chromatic(
    g: Graph, p: ChromaticPartition, antihole: Sequence[int] = ()
) -> Tuple[Graph, ContractionRecord]:
    """
    Contract every part of p into a new vertex.

    Raises:
        ContractViolation: if p breaks an invariant
    """
    problems = verify_partition(g, p)
    if problems:
        raise ContractViolation("; ".join(problems), claim="partition")
    reduced, origin = contract_parts(g, p.parts)
    t = len(p.parts)
    new_ids = tuple(range(reduced.n - t, reduced.n))
    new_mask = sum(1 << v for v in new_ids)
    if not is_clique(reduced, new_mask):
        raise ContractViolation("contracted vertices do not form a clique", claim="partition")
    return reduced, ContractionRecord(p, origin, new_ids, g.n, tuple(antihole))
