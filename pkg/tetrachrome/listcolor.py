"""
List Coloring

Exact list-coloring subroutines over color sets {1, 2, 3, 4}.

COLOR SETS:
A list is an int mask with bit c set when color c is allowed, so
{1, 2, 3, 4} is 0b11110. A ListAssignment is one mask per vertex of the
graph; entries for vertices outside `within` are ignored.

SOLVERS:
- list_color_2: two-color palettes through 2SAT
- list_color / list_color_3: backtracking with unit propagation,
  smallest list first (ties by lowest id), lowest color first. Vertices
  whose list is longer than their degree into the remaining vertices are
  set aside first and colored greedily at the end; they can never block.
- dsatur_color: exact k-coloring by DSATUR-ordered backtracking

Every coloring returned is re-checked (proper, list-respecting) first.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Union

from tetrachrome.errors import ContractViolation, UsageError
from tetrachrome.graph import Coloring, Graph, is_proper, iter_bits, lowest
from tetrachrome.twosat import TwoSatInstance, lit, solve_2sat

log = logging.getLogger("tetrachrome.listcolor")

ALL_COLORS = 0b11110

Palette = Union[int, Iterable[int]]


# ============================================================================
# COLOR-SET HELPERS
# ============================================================================

def color_mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def colors_of(mask: int) -> List[int]:
    return list(iter_bits(mask))


def _palette_mask(palette: Palette) -> int:
    mask = palette if isinstance(palette, int) else color_mask(palette)
    if mask & ~ALL_COLORS:
        raise UsageError(f"palette {colors_of(mask)} has colors outside 1..4")
    return mask


def _check_lists(g: Graph, lists: Sequence[int], within: int, palette: int) -> None:
    if len(lists) != g.n:
        raise UsageError(f"expected {g.n} lists, got {len(lists)}")
    for v in iter_bits(within):
        if lists[v] & ~palette:
            raise UsageError(f"list of vertex {v} is not inside the palette {colors_of(palette)}")


def _verify(g: Graph, coloring: Coloring, lists: Sequence[int], within: int) -> Coloring:
    if not is_proper(g, coloring).ok:
        raise ContractViolation("list coloring is not proper", claim="listcolor")
    for v in iter_bits(within):
        if not lists[v] >> coloring[v] & 1:
            raise ContractViolation(f"vertex {v} colored outside its list", claim="listcolor")
    return coloring


# ============================================================================
# TWO COLORS (2SAT)
# ============================================================================

def list_color_2(
    g: Graph, lists: Sequence[int], palette: Palette, within: Optional[int] = None
) -> Optional[Coloring]:
    """
    List coloring with a palette of at most two colors.

    One variable per vertex (true = first palette color); a singleton list
    becomes a unit clause and each edge two difference clauses.
    """
    if within is None:
        within = g.vertices
    pal = _palette_mask(palette)
    if pal.bit_count() > 2:
        raise UsageError("list_color_2 needs a palette of at most two colors")
    _check_lists(g, lists, within, pal)
    members = list(iter_bits(within))
    if not members:
        return tuple([0] * g.n)
    if any(lists[v] == 0 for v in members):
        return None
    first = lowest(pal)
    second = lowest(pal & ~(1 << first)) if pal.bit_count() == 2 else None

    index = {v: i for i, v in enumerate(members)}
    inst = TwoSatInstance(len(members))
    for v in members:
        if lists[v] == 1 << first:
            inst.add_clause(lit(index[v]))
        elif lists[v] != pal:
            inst.add_clause(lit(index[v], False))
    for v in members:
        for u in iter_bits(g.rows[v] & within):
            if u > v:
                inst.add_clause(lit(index[u]), lit(index[v]))
                inst.add_clause(lit(index[u], False), lit(index[v], False))
    model = solve_2sat(inst)
    if model is None:
        return None
    out = [0] * g.n
    for v in members:
        out[v] = first if model[index[v]] else second
    return _verify(g, tuple(out), lists, within)


# ============================================================================
# GENERAL LISTS (BACKTRACKING)
# ============================================================================

def _propagate(g: Graph, dom: List[int], core: int, queue: List[int]) -> bool:
    while queue:
        v = queue.pop()
        c = dom[v]
        for u in iter_bits(g.rows[v] & core):
            if dom[u] & c:
                dom[u] &= ~c
                if dom[u] == 0:
                    return False
                if dom[u] & (dom[u] - 1) == 0:
                    queue.append(u)
    return True


def _search(g: Graph, dom: List[int], core: int) -> Optional[List[int]]:
    best = None
    best_size = 5
    for v in iter_bits(core):
        size = dom[v].bit_count()
        if 1 < size < best_size:
            best, best_size = v, size
            if size == 2:
                break
    if best is None:
        return dom
    for c in iter_bits(dom[best]):
        trial = list(dom)
        trial[best] = 1 << c
        if _propagate(g, trial, core, [best]):
            found = _search(g, trial, core)
            if found is not None:
                return found
    return None


def list_color(
    g: Graph, lists: Sequence[int], within: Optional[int] = None, palette: Palette = ALL_COLORS
) -> Optional[Coloring]:
    """
    Exact list coloring of G[within].

    Returns:
        A coloring of length g.n (0 outside `within`) or None
    """
    if within is None:
        within = g.vertices
    pal = _palette_mask(palette)
    _check_lists(g, lists, within, ALL_COLORS)
    dom = [lists[v] & pal if within >> v & 1 else 0 for v in range(g.n)]
    if any(dom[v] == 0 for v in iter_bits(within)):
        return None

    # set aside vertices with more colors than active neighbors
    core = within
    deferred = []
    changed = True
    while changed:
        changed = False
        for v in iter_bits(core):
            if dom[v].bit_count() > (g.rows[v] & core).bit_count():
                deferred.append(v)
                core &= ~(1 << v)
                changed = True

    singles = [v for v in iter_bits(core) if dom[v] & (dom[v] - 1) == 0]
    if not _propagate(g, dom, core, singles):
        return None
    solved = _search(g, dom, core)
    if solved is None:
        return None

    out = [0] * g.n
    for v in iter_bits(core):
        out[v] = lowest(solved[v])
    for v in reversed(deferred):
        taken = 0
        for u in iter_bits(g.rows[v] & within):
            taken |= 1 << out[u]
        out[v] = lowest(dom[v] & ~taken)
    log.debug("list coloring: %d searched, %d set aside", core.bit_count(), len(deferred))
    return _verify(g, tuple(out), lists, within)


def list_color_3(
    g: Graph, lists: Sequence[int], palette: Palette, within: Optional[int] = None
) -> Optional[Coloring]:
    """List coloring where every list lies inside a palette of at most three colors."""
    if within is None:
        within = g.vertices
    pal = _palette_mask(palette)
    if pal.bit_count() > 3:
        raise UsageError("list_color_3 needs a palette of at most three colors")
    _check_lists(g, lists, within, pal)
    return list_color(g, lists, within, pal)


# ============================================================================
# EXACT K-COLORING
# ============================================================================

def dsatur_color(g: Graph, k: int = 4, within: Optional[int] = None) -> Optional[Coloring]:
    """
    Exact k-coloring of G[within] by DSATUR backtracking.

    The next vertex has the most distinct colors among its colored
    neighbors (ties: most uncolored neighbors, then lowest id). A color
    that no vertex uses yet is only tried once, as the smallest such color.
    """
    if within is None:
        within = g.vertices
    colors = [0] * g.n
    seen = [0] * g.n

    def pick(uncolored: int) -> int:
        best, key = -1, None
        for v in iter_bits(uncolored):
            cand = (seen[v].bit_count(), (g.rows[v] & uncolored).bit_count())
            if key is None or cand > key:
                best, key = v, cand
        return best

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = pick(uncolored)
        for c in range(1, min(k, used + 1) + 1):
            if seen[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in iter_bits(g.rows[v] & uncolored):
                if not seen[u] >> c & 1:
                    seen[u] |= 1 << c
                    touched.append(u)
            if solve(uncolored & ~(1 << v), max(used, c)):
                return True
            for u in touched:
                seen[u] &= ~(1 << c)
            colors[v] = 0
        return False

    if not solve(within, 0):
        return None
    result = tuple(colors)
    if not is_proper(g, result, k=k).ok:
        raise ContractViolation("DSATUR coloring is not proper", claim="dsatur")
    if any(result[v] == 0 for v in iter_bits(within)):
        raise ContractViolation("DSATUR left a vertex uncolored", claim="dsatur")
    return result
