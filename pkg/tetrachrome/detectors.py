"""
Structure Detectors

Finds forbidden or decisive induced structures (P_k, C_k, K_k, k-antiholes)
and classifies how the rest of a graph attaches to a 7-antihole.

HOW THE SEARCH WORKS:
Every detector grows an induced path one vertex at a time. The candidates
for the next vertex are the neighbors of the last vertex minus the closed
neighborhoods of all earlier vertices, which is a single mask expression.
Cycles are paths whose last vertex closes back to the first; antiholes are
cycles of the complement.

ORDER:
All searches branch on the lowest vertex id first, so results (and the
order in which enumerations yield them) are deterministic and
lexicographic.

ANTIHOLE CONVENTION:
An antihole C = (v0, ..., v6) has v_i v_j as an edge exactly when the
cyclic distance between i and j is at least 2. Attachment patterns are
7-bit masks: bit i is set when the vertex is adjacent to v_i.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tetrachrome import config
from tetrachrome.errors import ContractViolation, ProblemSizeError, UsageError
from tetrachrome.graph import Graph, complement, components, is_clique, iter_bits, lowest, to_mask
from tetrachrome.models import AntiholeRecord, CleanReport, Evidence

log = logging.getLogger("tetrachrome.detectors")

ANTIHOLE = 7
FULL_PATTERN = (1 << ANTIHOLE) - 1


# ============================================================================
# SIZE GUARD
# ============================================================================

def check_size(g: Graph, force: bool = False) -> None:
    """Refuse graphs above the desk-scale ceiling unless forced."""
    if g.n > config.MAX_VERTICES and not force:
        raise ProblemSizeError(
            f"graph has {g.n} vertices, above the limit of {config.MAX_VERTICES} "
            "(pass force=True / --force to run anyway)"
        )


# ============================================================================
# INDUCED PATHS AND CYCLES
# ============================================================================

def _grow_path(rows: Sequence[int], path: List[int], blocked: int, k: int, allowed: int) -> Iterator[List[int]]:
    # blocked = closed neighborhoods of path[:-1]
    if len(path) == k:
        yield list(path)
        return
    last = path[-1]
    next_blocked = blocked | rows[last] | (1 << last)
    for w in iter_bits(rows[last] & ~blocked & allowed):
        path.append(w)
        yield from _grow_path(rows, path, next_blocked, k, allowed)
        path.pop()


def _induced_paths(rows: Sequence[int], n: int, k: int) -> Iterator[List[int]]:
    full = (1 << n) - 1
    for v in range(n):
        for path in _grow_path(rows, [v], 0, k, full):
            if k == 1 or path[0] < path[-1]:
                yield path


def _grow_cycle(rows: Sequence[int], path: List[int], inner: int, k: int, allowed: int) -> Iterator[List[int]]:
    # path = v0, p1, ..., p_j ; inner = closed neighborhoods of p1..p_{j-1}
    v0, last = path[0], path[-1]
    cands = rows[last] & ~inner & allowed
    if len(path) == k - 1:
        cands &= rows[v0]
    else:
        cands &= ~(rows[v0] | (1 << v0))
    next_inner = inner | rows[last] | (1 << last)
    for w in iter_bits(cands):
        path.append(w)
        if len(path) == k:
            if path[1] < path[-1]:
                yield list(path)
        else:
            yield from _grow_cycle(rows, path, next_inner, k, allowed)
        path.pop()


def _induced_cycles(rows: Sequence[int], n: int, k: int) -> Iterator[List[int]]:
    full = (1 << n) - 1
    for v0 in range(n):
        allowed = full & ~((1 << (v0 + 1)) - 1)
        for p1 in iter_bits(rows[v0] & allowed):
            # p1 is the only vertex of the path adjacent to v0 besides the last
            yield from _grow_cycle(rows, [v0, p1], 0, k, allowed)


def enumerate_induced_paths(g: Graph, k: int, force: bool = False) -> Iterator[List[int]]:
    """Yield every induced P_k once (as the orientation with the smaller first end)."""
    if k < 1:
        raise UsageError("path length must be at least 1")
    check_size(g, force)
    return _induced_paths(g.rows, g.n, k)


def enumerate_induced_cycles(g: Graph, k: int, force: bool = False) -> Iterator[List[int]]:
    """
    Yield every induced C_k once: starting at its lowest vertex, oriented
    so that the second vertex is smaller than the last.
    """
    if k < 3:
        raise UsageError("cycle length must be at least 3")
    check_size(g, force)
    return _induced_cycles(g.rows, g.n, k)


def find_induced_path(g: Graph, k: int, force: bool = False) -> Optional[List[int]]:
    return next(iter(enumerate_induced_paths(g, k, force)), None)


def find_induced_cycle(g: Graph, k: int, force: bool = False) -> Optional[List[int]]:
    return next(iter(enumerate_induced_cycles(g, k, force)), None)


# ============================================================================
# CLIQUES
# ============================================================================

def _grow_clique(rows: Sequence[int], clique: List[int], cands: int, k: int) -> Iterator[List[int]]:
    if len(clique) == k:
        yield list(clique)
        return
    while cands and cands.bit_count() >= k - len(clique):
        v = lowest(cands)
        cands &= cands - 1
        clique.append(v)
        yield from _grow_clique(rows, clique, cands & rows[v], k)
        clique.pop()


def enumerate_cliques(g: Graph, k: int, force: bool = False) -> Iterator[List[int]]:
    """Yield every k-clique once, as a sorted vertex list."""
    if k < 1:
        raise UsageError("clique size must be at least 1")
    check_size(g, force)
    return _grow_clique(g.rows, [], g.vertices, k)


def find_clique(g: Graph, k: int, force: bool = False) -> Optional[List[int]]:
    return next(iter(enumerate_cliques(g, k, force)), None)


# ============================================================================
# ANTIHOLES
# ============================================================================

def enumerate_antiholes(g: Graph, k: int = ANTIHOLE, force: bool = False) -> List[List[int]]:
    """
    All k-antiholes in canonical form, sorted lexicographically.

    Canonical form: starts at the lowest vertex; the second vertex is
    smaller than the last. Each antihole appears exactly once.
    """
    if k < 5:
        raise UsageError("antihole length must be at least 5")
    check_size(g, force)
    return sorted(_induced_cycles(complement(g).rows, g.n, k))


def find_antihole(g: Graph, k: int, force: bool = False) -> Optional[List[int]]:
    if k < 5:
        raise UsageError("antihole length must be at least 5")
    check_size(g, force)
    return next(_induced_cycles(complement(g).rows, g.n, k), None)


# ============================================================================
# WITNESS CHECKS
# ============================================================================

def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq):
        return False
    for a, b in itertools.combinations(range(len(seq)), 2):
        if g.adjacent(seq[a], seq[b]) != (b - a == 1):
            return False
    return True


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    for a, b in itertools.combinations(range(k), 2):
        if g.adjacent(seq[a], seq[b]) != (b - a in (1, k - 1)):
            return False
    return True


def is_antihole(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k < 5 or len(set(seq)) != k:
        return False
    for a, b in itertools.combinations(range(k), 2):
        if g.adjacent(seq[a], seq[b]) == (b - a in (1, k - 1)):
            return False
    return True


def find_forbidden(g: Graph, force: bool = False) -> Optional[Tuple[str, List[int]]]:
    """First induced P6, else first induced C5, else None."""
    path = find_induced_path(g, 6, force)
    if path is not None:
        return "P6", path
    cycle = find_induced_cycle(g, 5, force)
    if cycle is not None:
        return "C5", cycle
    return None


def is_free(g: Graph, force: bool = False) -> bool:
    return find_forbidden(g, force) is None


# ============================================================================
# ANTIHOLE PATTERNS
# ============================================================================

def _distance(i: int, j: int) -> int:
    d = abs(i - j) % ANTIHOLE
    return min(d, ANTIHOLE - d)


TRIANGLES: Tuple[int, ...] = tuple(
    to_mask(t) for t in itertools.combinations(range(ANTIHOLE), 3)
    if all(_distance(a, b) >= 2 for a, b in itertools.combinations(t, 2))
)


def has_bit(pattern: int, i: int) -> bool:
    return bool(pattern >> (i % ANTIHOLE) & 1)


def interval(start: int, length: int) -> int:
    """Pattern of `length` consecutive positions starting at `start`."""
    return to_mask((start + t) % ANTIHOLE for t in range(length))


def is_consecutive(pattern: int) -> bool:
    size = pattern.bit_count()
    if size == 0:
        return False
    return any(pattern == interval(i, size) for i in range(ANTIHOLE))


def longest_run(pattern: int) -> int:
    """Length of the longest cyclic run of set positions."""
    if pattern == FULL_PATTERN:
        return ANTIHOLE
    best = 0
    for i in range(ANTIHOLE):
        run = 0
        while run < ANTIHOLE and has_bit(pattern, i + run):
            run += 1
        best = max(best, run)
    return best


def complete_to_triangle(pattern: int) -> bool:
    return any(t & ~pattern == 0 for t in TRIANGLES)


def rotate(pattern: int, shift: int) -> int:
    """Move position i to position i - shift."""
    return to_mask((i - shift) % ANTIHOLE for i in iter_bits(pattern))


# ============================================================================
# ATTACHMENT CLASSIFICATION
# ============================================================================

@dataclass(frozen=True, eq=False)
class AntiholeContext:
    """A 7-antihole C together with the partition of the rest of the graph."""

    g: Graph
    c: Tuple[int, ...]
    c_mask: int
    x: int
    y: int
    z: int
    z_at: Tuple[int, ...]
    big: int
    small: int
    s: int
    patterns: Dict[int, int] = field(repr=False)

    def pattern(self, v: int) -> int:
        return self.patterns.get(v, 0)

    def v(self, i: int) -> int:
        return self.c[i % ANTIHOLE]

    def vertices_at(self, pattern: int) -> int:
        return to_mask(self.c[i] for i in iter_bits(pattern))


def classify_attachment(g: Graph, c: Sequence[int]) -> AntiholeContext:
    """
    Split V(G) around the 7-antihole c into X = N(C), Y, leaves Z_0..Z_6,
    big and small vertices, and S (small vertices with a neighbor in Y ∪ Z).

    Raises:
        ContractViolation: if c does not induce a 7-antihole
    """
    c = tuple(c)
    if len(c) != ANTIHOLE or any(not 0 <= v < g.n for v in c) or not is_antihole(g, c):
        raise ContractViolation(f"{list(c)} is not a 7-antihole", claim="antihole")
    c_mask = to_mask(c)
    x = 0
    for v in c:
        x |= g.rows[v]
    x &= ~c_mask
    y = g.vertices & ~c_mask & ~x

    patterns = {}
    z_at = [0] * ANTIHOLE
    big = small = 0
    for u in iter_bits(x):
        p = to_mask(i for i, v in enumerate(c) if g.rows[u] >> v & 1)
        patterns[u] = p
        if p.bit_count() == 1:
            z_at[lowest(p)] |= 1 << u
        elif complete_to_triangle(p):
            big |= 1 << u
        else:
            small |= 1 << u
    z = 0
    for zl in z_at:
        z |= zl

    outside = y | z
    s = 0
    for u in iter_bits(small):
        if g.rows[u] & outside:
            s |= 1 << u

    return AntiholeContext(g, c, c_mask, x, y, z, tuple(z_at), big, small, s, patterns)


# ============================================================================
# ATTACHMENT PROPERTY ASSERTIONS
# ============================================================================

def assert_lemma1(ctx: AntiholeContext) -> List[str]:
    """
    Check the attachment properties every (P6,C5)-free graph satisfies.

    Properties (1), (2), (3.1), (4.1) and (5) are checked for every vertex;
    the conditional properties (3.2), (3.3), (4.2.1) and (4.2.2) are checked
    wherever their hypotheses hold. An empty list means no violation.
    """
    g = ctx.g
    out: List[str] = []

    def report(prop: str, msg: str) -> None:
        line = f"({prop}) {msg}"
        if line not in out:
            out.append(line)

    for xv in iter_bits(ctx.x):
        p = ctx.pattern(xv)
        is_leaf = bool(ctx.z >> xv & 1)
        is_small = bool(ctx.small >> xv & 1)

        for i in range(ANTIHOLE):
            if has_bit(p, i) and has_bit(p, i + 1) and not has_bit(p, i - 1) and not has_bit(p, i + 2):
                report("1", f"vertex {xv} complete to v{i},v{(i + 1) % 7} but to neither v{(i - 1) % 7} nor v{(i + 2) % 7}")

        if is_leaf or is_small:
            one_sided = any(
                not has_bit(p, i - 1) and not has_bit(p, i + 2) and has_bit(p, i) != has_bit(p, i + 1)
                for i in range(ANTIHOLE)
            )
            if not one_sided and not (is_consecutive(p) and p.bit_count() in (3, 4)):
                report("2", f"vertex {xv} has neighbor pattern {p:07b} on C")

        for ell in range(ANTIHOLE):
            if ctx.z_at[ell] >> xv & 1:
                continue
            region = ctx.y | ctx.z_at[ell]
            for u in iter_bits(g.rows[xv] & region):
                if is_leaf:
                    report("3.1", f"leaf {xv} has neighbor {u} in Y or Z_{ell}")
                for i in range(ANTIHOLE):
                    if has_bit(p, i) and not (has_bit(p, i - 1) or has_bit(p, i + 1) or has_bit(p, i + 2)):
                        if not (ctx.z_at[ell] >> u & 1 and (ell - i) % ANTIHOLE in (0, 1, 2)):
                            report("3.2", f"vertex {xv} isolated at v{i} has neighbor {u} outside Z_{i}..Z_{(i + 2) % 7}")
                mixed = g.rows[u] & region & ~g.rows[xv] & ~(1 << xv)
                if mixed and longest_run(p) < 5:
                    report("3.3", f"vertex {xv} mixed on edge {u}-{lowest(mixed)} with fewer than 5 consecutive neighbors on C")

        if ctx.s >> xv & 1:
            if not (is_consecutive(p) and p.bit_count() in (3, 4)):
                report("4.1", f"small vertex {xv} has neighbor pattern {p:07b} on C")
            for j in range(ANTIHOLE):
                if has_bit(p, j):
                    continue
                if g.rows[xv] & ctx.z_at[j]:
                    need = interval(j + 2, 4)
                    if need & ~p:
                        report("4.2.1", f"small vertex {xv} sees Z_{j} but misses part of v{(j + 2) % 7}..v{(j - 2) % 7}")
                if ctx.z_at[j] and p & interval(j - 1, 3):
                    report("4.2.2", f"small vertex {xv} touches v{(j - 1) % 7}..v{(j + 1) % 7} while Z_{j} is non-empty")

    for x1, x2 in itertools.combinations(iter_bits(ctx.s), 2):
        if g.adjacent(x1, x2):
            continue
        p1, p2 = ctx.pattern(x1), ctx.pattern(x2)
        if p1 & ~p2 and p2 & ~p1:
            report("5", f"non-adjacent small vertices {x1},{x2} have incomparable patterns on C")

    return out


# ============================================================================
# CLEAN CHECK
# ============================================================================

def antihole_verdict(g: Graph, ctx: AntiholeContext) -> AntiholeRecord:
    """
    Conditions (C1), (C2) and (C3) for one antihole; the first failure wins.
    """
    antihole = list(ctx.c)
    for u in iter_bits(ctx.x):
        if ctx.pattern(u) == FULL_PATTERN:
            return AntiholeRecord(antihole=antihole, verdict="C1", witness=[u])

    six = [u for u in iter_bits(ctx.x) if ctx.pattern(u).bit_count() == 6]
    for u1, u2 in itertools.combinations(six, 2):
        if ctx.pattern(u1) != ctx.pattern(u2):
            return AntiholeRecord(antihole=antihole, verdict="C2", witness=[u1, u2])

    for k in components(g, ctx.y):
        boundary = 0
        common = g.vertices
        for v in iter_bits(k):
            boundary |= g.rows[v]
            common &= g.rows[v]
        boundary &= ~k
        if is_clique(g, boundary) or common:
            continue
        return AntiholeRecord(antihole=antihole, verdict="dirty", witness=list(iter_bits(k)))

    return AntiholeRecord(antihole=antihole, verdict="clean")


def check_clean(g: Graph, force: bool = False) -> CleanReport:
    """
    Decide whether g is clean.

    K5 and 9-antiholes are reported first, then any (C1)/(C2) failure over
    all 7-antiholes; a dirty component is only returned once every antihole
    has passed (C1) and (C2).
    """
    check_size(g, force)
    k5 = find_clique(g, 5, force)
    if k5 is not None:
        return CleanReport(verdict="K5", evidence=Evidence(kind="K5", witness=k5))
    nine = find_antihole(g, 9, force)
    if nine is not None:
        return CleanReport(verdict="antihole9", evidence=Evidence(kind="antihole9", witness=nine))

    records: List[AntiholeRecord] = []
    dirty: Optional[AntiholeRecord] = None
    for c in enumerate_antiholes(g, ANTIHOLE, force):
        record = antihole_verdict(g, classify_attachment(g, c))
        records.append(record)
        if record.verdict in ("C1", "C2"):
            log.debug("antihole %s fails %s with %s", c, record.verdict, record.witness)
            return CleanReport(
                verdict=record.verdict,
                evidence=Evidence(kind=record.verdict, witness=record.witness, antihole=c),
                antihole=c,
                records=records,
            )
        if record.verdict == "dirty" and dirty is None:
            dirty = record

    if dirty is not None:
        return CleanReport(verdict="dirty", antihole=dirty.antihole, component=dirty.witness, records=records)
    return CleanReport(verdict="clean", records=records)
