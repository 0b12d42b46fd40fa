"""
Nice Colorings

A nice coloring is a partial 4-coloring where
  (N1) the uncolored vertices form an independent set, and
  (N2) the neighbors of each uncolored y split into U (colors 1, 2) and
       W (colors 3, 4), at least one of them independent.

HOW IT WORKS:
`nice_complete` colors the uncolored vertices one at a time. Say U is the
independent side, U1/U2 its vertices of color 1/2. If one of them is
empty, y takes that color. Otherwise colors 1 and 2 are swapped on every
component of G[V12] (vertices colored 1 or 2) that meets U1; all of U is
then colored 2 and y takes 1. A swap keeps (N1) and (N2) for every other
uncolored vertex. In a (P6,C5)-free graph no component of G[V12] meets
both U1 and U2: a shortest such path would close a C5 through y or be an
induced P6.
"""
import logging
from collections import deque
from typing import List, Optional, Sequence, Tuple

from tetrachrome.errors import ContractViolation, InputNotFreeError, NiceColoringError
from tetrachrome.graph import Coloring, Graph, UNCOLORED, components, is_independent, is_proper, iter_bits, lowest

log = logging.getLogger("tetrachrome.nice")


def _uncolored(c: Sequence[int]) -> int:
    mask = 0
    for v, color in enumerate(c):
        if color == UNCOLORED:
            mask |= 1 << v
    return mask


def _class(g: Graph, c: Sequence[int], within: int, colors: Tuple[int, ...]) -> int:
    mask = 0
    for v in iter_bits(within):
        if c[v] in colors:
            mask |= 1 << v
    return mask


def nice_split(g: Graph, c: Sequence[int], y: int) -> Optional[Tuple[int, int]]:
    """
    The independent side of N(y) and the color pair it uses.

    Returns:
        (side, first color of the pair) with side = U and pair (1, 2), or
        side = W and pair (3, 4); None when neither side is independent
    """
    u = _class(g, c, g.rows[y], (1, 2))
    if is_independent(g, u):
        return u, 1
    w = _class(g, c, g.rows[y], (3, 4))
    if is_independent(g, w):
        return w, 3
    return None


def check_nice(g: Graph, c: Sequence[int]) -> List[str]:
    """Every (N1)/(N2) failure of c, as readable strings; empty when nice."""
    problems = []
    if not is_proper(g, c).ok:
        problems.append("partial coloring is not proper")
    free = _uncolored(c)
    if not is_independent(g, free):
        problems.append("N1: uncolored vertices are not independent")
    for y in iter_bits(free):
        if nice_split(g, c, y) is None:
            problems.append(f"N2: neither side of N({y}) is independent")
    return problems


def _kempe_path(g: Graph, sources: int, targets: int, within: int) -> List[int]:
    """Shortest path inside `within` from a source to a target (BFS)."""
    parent = {v: None for v in iter_bits(sources)}
    queue = deque(iter_bits(sources))
    while queue:
        v = queue.popleft()
        if targets >> v & 1:
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return path[::-1]
        for u in iter_bits(g.rows[v] & within):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return []


def nice_complete(g: Graph, partial: Sequence[int]) -> Coloring:
    """
    Complete a nice coloring to a proper total 4-coloring.

    Raises:
        NiceColoringError: partial is not a nice coloring
        InputNotFreeError: a swap chain joins both color classes of the
            independent side, so g has an induced P6 or C5
    """
    problems = check_nice(g, partial)
    if problems:
        claim = next((p[:2] for p in problems if p.startswith("N")), "proper")
        raise NiceColoringError("; ".join(problems), claim=claim)

    c = list(partial)
    free = _uncolored(c)
    flips = 0
    while free:
        y = lowest(free)
        side, a = nice_split(g, c, y)
        b = a + 1
        side_a = _class(g, c, side, (a,))
        side_b = _class(g, c, side, (b,))
        if not side_a:
            c[y] = a
        elif not side_b:
            c[y] = b
        else:
            v_ab = _class(g, c, g.vertices, (a, b))
            chain = 0
            for comp in components(g, v_ab):
                if comp & side_a:
                    chain |= comp
            if chain & side_b:
                path = _kempe_path(g, side_a, side_b, v_ab)
                raise InputNotFreeError(
                    f"colors {a}/{b} chain joins both sides of vertex {y}",
                    claim="nice",
                    witness=[y] + path,
                )
            for v in iter_bits(chain):
                c[v] = b if c[v] == a else a
            c[y] = a
            flips += 1
        free &= ~(1 << y)

    result = tuple(c)
    if not is_proper(g, result, require_total=True).ok:
        raise ContractViolation("nice completion is not a proper coloring", claim="nice")
    log.debug("nice completion: %d swaps", flips)
    return result
