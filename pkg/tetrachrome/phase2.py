"""
Phase II: Coloring Around a 7-Antihole

Decides 4-colorability of a clean (P6,C5)-free graph that contains a
7-antihole C and has no clique cutset, and builds a coloring when one
exists.

WHY IT WORKS:
Fixing the colors of C plus a few seed vertices R (at most one per
position of C) pins down a list of at most two colors on every vertex of
X \\ Z, where X = N(C) and Z are the leaves. Whether those choices extend
to the rest of the graph only depends on 3-colorings of single
neighborhoods and 2-colorings of common neighborhoods, so those are
tested up front (Q tables) and the remaining choice is a 2SAT instance.

HOW IT WORKS (per base coloring of C ∪ R):
1. L(v) = {base color} on C ∪ R, {1,2,3,4} elsewhere
2. propagate singleton lists to neighbors
3. Q(v): colors i in L(v) for which G[N(v)] has no 3-coloring avoiding i
4. Q(u,v): pairs (i, j) for which G[N(u) ∩ N(v)] has no 2-coloring
   avoiding both
5. 2SAT over C ∪ (X \\ Z) respecting L and both Q tables
The first satisfiable base gives a good coloring, which
`extend_good_coloring` grows into a total coloring. When every base
fails, the graph is not 4-colorable.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from tetrachrome.detectors import (
    ANTIHOLE,
    AntiholeContext,
    check_size,
    classify_attachment,
    find_antihole,
    find_clique,
    has_bit,
    interval,
)
from tetrachrome.errors import ContractViolation
from tetrachrome.graph import (
    Coloring,
    Graph,
    UNCOLORED,
    bits,
    components,
    complete_to,
    is_proper,
    iter_bits,
    lowest,
    set_neighbors,
    to_mask,
)
from tetrachrome.listcolor import ALL_COLORS, colors_of, list_color, list_color_2, list_color_3
from tetrachrome.nice import nice_complete
from tetrachrome.trace import TraceLog, emit, vertex_labels
from tetrachrome.twosat import TwoSatInstance, lit, solve_2sat

log = logging.getLogger("tetrachrome.phase2")

MAX_SEEDS = ANTIHOLE

ColorPair = Tuple[int, int]


# ============================================================================
# STATE
# ============================================================================

@dataclass
class ColorState:
    """
    Lists and forbidden-color tables for one base coloring.

    q1[v] is a color mask. q2 is keyed by (u, v) with u < v and holds
    pairs (color of u, color of v).
    """

    lists: List[int]
    r: int
    base: Coloring
    q1: Dict[int, int] = field(default_factory=dict)
    q2: Dict[Tuple[int, int], Set[ColorPair]] = field(default_factory=dict)

    def forbidden_pairs(self, u: int, v: int) -> Set[ColorPair]:
        if u < v:
            return self.q2.get((u, v), set())
        return {(j, i) for i, j in self.q2.get((v, u), set())}


def step6_domain(ctx: AntiholeContext) -> int:
    """C ∪ (X \\ Z)."""
    return ctx.c_mask | (ctx.x & ~ctx.z)


# ============================================================================
# STEPS 1-2: SEEDS AND BASE COLORINGS
# ============================================================================

def build_r(ctx: AntiholeContext) -> int:
    """
    One seed per position i of C, when S has a vertex complete to
    v_i, v_{i+1}, v_{i+2} and anticomplete to v_{i-1}. Vertices missing
    v_{i+3} are preferred; ties go to the lowest id.
    """
    r = 0
    for i in range(ANTIHOLE):
        need = interval(i, 3)
        candidates = [
            u for u in iter_bits(ctx.s)
            if ctx.pattern(u) & need == need and not has_bit(ctx.pattern(u), i - 1)
        ]
        if not candidates:
            continue
        preferred = [u for u in candidates if not has_bit(ctx.pattern(u), i + 3)]
        r |= 1 << (preferred or candidates)[0]
    if r.bit_count() > MAX_SEEDS:
        raise ContractViolation(f"{r.bit_count()} seed vertices", claim="seeds")
    return r


def enumerate_base_colorings(g: Graph, ctx: AntiholeContext, r: int) -> Iterator[Coloring]:
    """
    Every proper 4-coloring of G[C ∪ R] up to renaming colors.

    Vertices are colored in the order C then R by id; a vertex may only
    open the smallest unused color, so each class of colorings equal up
    to a permutation appears once. Vertices outside C ∪ R are 0.
    """
    order = list(ctx.c) + bits(r)
    colors = [UNCOLORED] * g.n

    def grow(i: int, used: int) -> Iterator[Coloring]:
        if i == len(order):
            yield tuple(colors)
            return
        v = order[i]
        taken = {colors[u] for u in order[:i] if g.adjacent(u, v)}
        for color in range(1, min(4, used + 1) + 1):
            if color in taken:
                continue
            colors[v] = color
            yield from grow(i + 1, max(used, color))
        colors[v] = UNCOLORED

    yield from grow(0, 0)


def initial_state(g: Graph, ctx: AntiholeContext, r: int, base: Coloring) -> ColorState:
    seeded = ctx.c_mask | r
    lists = [1 << base[v] if seeded >> v & 1 else ALL_COLORS for v in range(g.n)]
    return ColorState(lists, r, base)


# ============================================================================
# STEPS 3-5: PROPAGATION AND Q TABLES
# ============================================================================

def propagate(g: Graph, state: ColorState) -> ColorState:
    """Remove the color of every singleton list from its neighbors' lists."""
    lists = state.lists
    queue = [v for v in range(g.n) if lists[v].bit_count() == 1]
    done = 0
    while queue:
        v = queue.pop()
        if done >> v & 1 or lists[v].bit_count() != 1:
            continue
        done |= 1 << v
        color = lists[v]
        for u in iter_bits(g.rows[v]):
            if lists[u] & color:
                lists[u] &= ~color
                if lists[u].bit_count() == 1:
                    queue.append(u)
    return state


def compute_q1(g: Graph, state: ColorState, domain: Optional[int] = None) -> ColorState:
    """
    Q(v) for v in `domain` (every vertex by default): colors i of L(v)
    such that G[N(v)] has no coloring from L(w) minus i.
    """
    if domain is None:
        domain = g.vertices
    for v in iter_bits(domain):
        forbidden = 0
        for i in colors_of(state.lists[v]):
            drop = 1 << i
            reduced = [lst & ~drop for lst in state.lists]
            if list_color_3(g, reduced, ALL_COLORS & ~drop, within=g.rows[v]) is None:
                forbidden |= drop
        if forbidden:
            state.q1[v] = forbidden
    return state


def compute_q2(g: Graph, state: ColorState, domain: Optional[int] = None) -> ColorState:
    """
    Q(u, v) for pairs inside `domain`: color pairs (i, j), i != j, such
    that G[N(u) ∩ N(v)] has no coloring from L(w) minus {i, j}.
    """
    if domain is None:
        domain = g.vertices
    for u, v in itertools.combinations(iter_bits(domain), 2):
        common = g.rows[u] & g.rows[v]
        if not common:
            continue
        pairs = set()
        for i in colors_of(state.lists[u]):
            for j in colors_of(state.lists[v]):
                if i == j:
                    continue
                drop = 1 << i | 1 << j
                reduced = [lst & ~drop for lst in state.lists]
                if list_color_2(g, reduced, ALL_COLORS & ~drop, within=common) is None:
                    pairs.add((i, j))
        if pairs:
            state.q2[(u, v)] = pairs
    return state


def prepare_state(g: Graph, ctx: AntiholeContext, r: int, base: Coloring) -> ColorState:
    """
    Lists and Q tables for one base coloring. The Q tables are skipped
    when a list on the Step 6 domain is already empty.
    """
    state = propagate(g, initial_state(g, ctx, r, base))
    domain = step6_domain(ctx)
    if any(state.lists[v] == 0 for v in iter_bits(domain)):
        return state
    compute_q1(g, state, domain)
    compute_q2(g, state, domain)
    return state


def format_tables(g: Graph, state: ColorState, domain: int) -> List[str]:
    """Stable text dump of L, Q(v) and Q(u,v)."""

    def colors(mask: int) -> str:
        return "{" + ",".join(str(c) for c in colors_of(mask)) + "}"

    out = [f"L {g.label(v)} {colors(state.lists[v])}" for v in range(g.n)]
    for v in iter_bits(domain):
        if state.q1.get(v):
            out.append(f"Q {g.label(v)} {colors(state.q1[v])}")
    for (u, v), pairs in sorted(state.q2.items()):
        listed = ",".join(f"({i},{j})" for i, j in sorted(pairs))
        out.append(f"QQ {g.label(u)} {g.label(v)} {{{listed}}}")
    return out


# ============================================================================
# STEP 6: GOOD COLORING BY 2SAT
# ============================================================================

def solve_step6(g: Graph, ctx: AntiholeContext, state: ColorState) -> Optional[Coloring]:
    """
    A coloring of G[C ∪ (X \\ Z)] inside the lists, avoiding Q(v) and
    Q(u, v), or None.

    Variable 4*k + (i - 1) stands for "the k-th domain vertex has color i".

    Raises:
        ContractViolation: a domain list has more than two colors
    """
    domain = step6_domain(ctx)
    members = bits(domain)
    if any(state.lists[v] == 0 for v in members):
        return None
    for v in members:
        if state.lists[v].bit_count() > 2:
            raise ContractViolation(
                f"vertex {v} keeps {state.lists[v].bit_count()} colors", claim="z2"
            )

    index = {v: k for k, v in enumerate(members)}

    def var(v: int, color: int, positive: bool = True) -> int:
        return lit(4 * index[v] + color - 1, positive)

    inst = TwoSatInstance(4 * len(members))
    for v in members:
        allowed = colors_of(state.lists[v])
        if len(allowed) == 1:
            inst.add_clause(var(v, allowed[0]))
        else:
            inst.add_clause(var(v, allowed[0]), var(v, allowed[1]))
        for i, j in itertools.combinations(range(1, 5), 2):
            inst.add_clause(var(v, i, False), var(v, j, False))
        for i in colors_of(state.q1.get(v, 0)):
            inst.add_clause(var(v, i, False))
    for u, v in itertools.combinations(members, 2):
        if g.adjacent(u, v):
            for i in range(1, 5):
                inst.add_clause(var(u, i, False), var(v, i, False))
        for i, j in state.q2.get((u, v), ()):
            inst.add_clause(var(u, i, False), var(v, j, False))

    model = solve_2sat(inst)
    if model is None:
        return None
    out = [UNCOLORED] * g.n
    for v in members:
        out[v] = next(i for i in range(1, 5) if model[4 * index[v] + i - 1])
    coloring = tuple(out)
    if not is_good(g, ctx, state, coloring):
        raise ContractViolation("step 6 model is not a good coloring", claim="step6")
    return coloring


def is_good(g: Graph, ctx: AntiholeContext, state: ColorState, c: Sequence[int]) -> bool:
    """Proper on the Step 6 domain and consistent with L, Q(v), Q(u, v)."""
    members = bits(step6_domain(ctx))
    if not is_proper(g, c).ok:
        return False
    for v in members:
        if not state.lists[v] >> c[v] & 1 or state.q1.get(v, 0) >> c[v] & 1:
            return False
    for u, v in itertools.combinations(members, 2):
        if (c[u], c[v]) in state.q2.get((u, v), ()):
            return False
    return True


def check_seed_lists(ctx: AntiholeContext, state: ColorState, good: Coloring) -> List[str]:
    """Lists that a good coloring pins down: singletons on B ∪ C ∪ R, at most two colors on X \\ Z."""
    problems = []
    for v in iter_bits(ctx.big | ctx.c_mask | state.r):
        if state.lists[v] != 1 << good[v]:
            problems.append(f"vertex {v} has list {colors_of(state.lists[v])}, colored {good[v]}")
    for v in iter_bits(ctx.x & ~ctx.z):
        if state.lists[v].bit_count() > 2:
            problems.append(f"vertex {v} keeps {state.lists[v].bit_count()} colors")
    return problems


# ============================================================================
# EXTENSION TO THE WHOLE GRAPH
# ============================================================================

def _anchor(g: Graph, ctx: AntiholeContext, k: int, a_plus: int) -> int:
    """A vertex of C ∪ (X \\ Z) complete to the component k, from A+ when possible."""
    if a_plus:
        return lowest(a_plus)
    for pos, leaves in enumerate(ctx.z_at):
        if k & ~leaves == 0:
            return ctx.v(pos)
    for x in iter_bits(ctx.x & ~ctx.z):
        if complete_to(g, x, k):
            return x
    raise ContractViolation(f"no vertex of X \\ Z is complete to component {bits(k)}", claim="c3")


def _nice_complete_on_pairs(g: Graph, c: Sequence[int], pair: int) -> List[int]:
    """
    Nice completion with the color pair `pair` playing the role of {1, 2}
    and its complement the role of {3, 4}.
    """
    order = colors_of(pair) + colors_of(ALL_COLORS & ~pair)
    rename = [UNCOLORED] * 5
    for new, old in enumerate(order, start=1):
        rename[old] = new
    done = nice_complete(g, [rename[color] for color in c])
    return [order[color - 1] for color in done]


def extend_good_coloring(g: Graph, ctx: AntiholeContext, state: ColorState, good: Coloring) -> Coloring:
    """
    Grow a good coloring into a proper 4-coloring of all of g.

    Components K of G[Y ∪ Z] whose A+ = S+ ∩ N(K) uses one color are
    3-colored avoiding the color of a vertex complete to K; those where A+
    uses two colors are 2-colored with the other two. What remains are
    single vertices; they are finished by nice completion when the S+
    lists are pairwise equal or disjoint, and otherwise all take the
    color missing from every S+ list.

    Raises:
        ContractViolation: a step that cannot fail on clean inputs failed
    """
    c = list(good)
    s_plus = to_mask(v for v in iter_bits(ctx.s) if state.lists[v].bit_count() == 2)
    leftover = 0
    for k in components(g, ctx.y | ctx.z):
        a_plus = set_neighbors(g, k) & s_plus
        used = sorted({c[a] for a in iter_bits(a_plus)})
        if len(used) <= 1:
            drop = 1 << c[_anchor(g, ctx, k, a_plus)]
            reduced = [lst & ~drop for lst in state.lists]
            colored = list_color_3(g, reduced, ALL_COLORS & ~drop, within=k)
        elif len(used) == 2:
            drop = 1 << used[0] | 1 << used[1]
            reduced = [lst & ~drop for lst in state.lists]
            colored = list_color_2(g, reduced, ALL_COLORS & ~drop, within=k)
        else:
            if k.bit_count() != 1:
                raise ContractViolation(f"component {bits(k)} sees 3 colors on S+", claim="z7")
            leftover |= k
            continue
        if colored is None:
            raise ContractViolation(f"component {bits(k)} has no coloring from its lists", claim="extension")
        for v in iter_bits(k):
            c[v] = colored[v]

    if leftover:
        s_lists = {state.lists[v] for v in iter_bits(s_plus)}
        if all(a == b or not a & b for a in s_lists for b in s_lists):
            log.debug("finishing %d vertices by nice completion", leftover.bit_count())
            c = _nice_complete_on_pairs(g, c, min(s_lists))
        else:
            union = 0
            for lst in s_lists:
                union |= lst
            spare = ALL_COLORS & ~union
            if spare.bit_count() != 1:
                raise ContractViolation(f"S+ lists cover {colors_of(union)}", claim="z8")
            color = lowest(spare)
            log.debug("finishing %d vertices with spare color %d", leftover.bit_count(), color)
            for v in iter_bits(leftover):
                c[v] = color

    result = tuple(c)
    check = is_proper(g, result, require_total=True)
    if not check.ok:
        raise ContractViolation(f"extension is not a proper coloring: {check}", claim="extension")
    return result


def extend_by_components(g: Graph, partial: Sequence[int], within: Optional[int] = None) -> Optional[Coloring]:
    """
    Color every uncolored component independently, each vertex avoiding
    the colors of its colored neighbors. None when some component fails.
    """
    c = list(partial)
    free = to_mask(v for v in range(g.n) if c[v] == UNCOLORED)
    if within is not None:
        free &= within
    for k in components(g, free):
        lists = list(ALL_COLORS for _ in range(g.n))
        for v in iter_bits(k):
            for u in iter_bits(g.rows[v] & ~k):
                if c[u] != UNCOLORED:
                    lists[v] &= ~(1 << c[u])
        colored = list_color(g, lists, within=k)
        if colored is None:
            return None
        for v in iter_bits(k):
            c[v] = colored[v]
    result = tuple(c)
    if not is_proper(g, result).ok:
        raise ContractViolation("component extension is not proper", claim="extension")
    return result


# ============================================================================
# DRIVER
# ============================================================================

def phase2_solve(
    g: Graph,
    c: Sequence[int],
    trace: Optional[TraceLog] = None,
    fallback: bool = False,
    force: bool = False,
) -> Optional[Coloring]:
    """
    Decide 4-colorability of g around the 7-antihole c.

    Args:
        g: clean (P6,C5)-free graph without a clique cutset
        c: the antihole, in cyclic order
        trace: optional event log
        fallback: when the literal extension fails, try
            extend_by_components before moving to the next base instead
            of raising
        force: run above the desk-scale ceiling

    Returns:
        A proper 4-coloring of g, or None when g is not 4-colorable

    Raises:
        ContractViolation: g is not clean, or good colorings exist but
            none of them could be extended
    """
    check_size(g, force)
    if find_clique(g, 5, force=True) is not None or find_antihole(g, 9, force=True) is not None:
        raise ContractViolation("phase II needs a graph without K5 and 9-antiholes", claim="clean")
    ctx = classify_attachment(g, c)
    r = build_r(ctx)
    order = list(ctx.c) + bits(r)
    emit(trace, "phase2.seeds", antihole=vertex_labels(g.labels, ctx.c), seeds=vertex_labels(g.labels, bits(r)))

    bases = 0
    stranded = 0
    for bases, base in enumerate(enumerate_base_colorings(g, ctx, r), start=1):
        state = prepare_state(g, ctx, r, base)
        good = solve_step6(g, ctx, state)
        emit(trace, "phase2.base", index=bases - 1, colors=[base[v] for v in order], good=good is not None)
        if good is None:
            continue
        problems = check_seed_lists(ctx, state, good)
        if problems:
            raise ContractViolation("; ".join(problems), claim="z2")
        emit(trace, "phase2.good", index=bases - 1, colors=[good[v] for v in bits(step6_domain(ctx))])
        try:
            result = extend_good_coloring(g, ctx, state, good)
            emit(trace, "phase2.extend", route="literal")
            log.info("phase II: base %d extends (%d bases tried)", bases - 1, bases)
            return result
        except ContractViolation as exc:
            if not fallback:
                raise
            log.warning("literal extension failed on base %d: %s", bases - 1, exc.detail)
        result = extend_by_components(g, good)
        if result is not None:
            emit(trace, "phase2.extend", route="components")
            return result
        stranded += 1

    if stranded:
        raise ContractViolation(f"{stranded} good colorings found, none extends", claim="extension")
    emit(trace, "phase2.exhausted", bases=bases)
    log.info("phase II: all %d base colorings fail", bases)
    return None


def enumerate_states(g: Graph, c: Sequence[int]) -> Iterator[Tuple[Coloring, ColorState, Optional[Coloring]]]:
    """(base, state, good coloring or None) for every base coloring, in order."""
    ctx = classify_attachment(g, c)
    r = build_r(ctx)
    for base in enumerate_base_colorings(g, ctx, r):
        state = prepare_state(g, ctx, r, base)
        yield base, state, solve_step6(g, ctx, state)
