"""
DIMACS Graph and Coloring Files

Graphs use the `.col` format:
    c comment
    p edge <n> <m>
    e <u> <v>          (1-based ids)

Colorings use one line per vertex:
    v <id> <color>     (1-based ids, colors 1..4)

Writers are deterministic: edges with u < v in lexicographic order,
coloring lines in vertex order.
"""
import logging
from pathlib import Path
from typing import List, Sequence, Union

from tetrachrome import config
from tetrachrome.errors import ParseError, ProblemSizeError
from tetrachrome.graph import Coloring, Graph
from tetrachrome.validation import (
    COLORING_PATTERN,
    EDGE_PATTERN,
    PROBLEM_PATTERN,
    validate_coloring_line,
    validate_edge_line,
    validate_problem_line,
)

log = logging.getLogger("tetrachrome.dimacs")


# ============================================================================
# GRAPHS
# ============================================================================

def read_dimacs(text: str, force: bool = False) -> Graph:
    """
    Parse a DIMACS `.col` document.

    Duplicate edges are accepted once; a declared edge count that does not
    match the number of distinct edges is logged, not rejected. A problem
    line above config.MAX_VERTICES is refused before any edge is read.

    Raises:
        ParseError: on a malformed line, a missing or repeated problem
            line, an out-of-range id or a self-loop
        ProblemSizeError: the declared vertex count is above the ceiling and
            force is not set
    """
    n = None
    declared_m = 0
    edges = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise ParseError("second problem line", line_no)
            is_valid, error = validate_problem_line(line)
            if not is_valid:
                raise ParseError(error, line_no)
            match = PROBLEM_PATTERN.match(line)
            n, declared_m = int(match.group(2)), int(match.group(3))
            if n > config.MAX_VERTICES and not force:
                raise ProblemSizeError(
                    f"problem line declares {n} vertices, above the limit of {config.MAX_VERTICES} "
                    "(pass force=True / --force to run anyway)"
                )
            continue
        if line.startswith("e"):
            if n is None:
                raise ParseError("edge before problem line", line_no)
            is_valid, error = validate_edge_line(line, n)
            if not is_valid:
                raise ParseError(error, line_no)
            match = EDGE_PATTERN.match(line)
            u, v = int(match.group(1)) - 1, int(match.group(2)) - 1
            edges.add((min(u, v), max(u, v)))
            continue
        raise ParseError(f"unknown line type: {line!r}", line_no)
    if n is None:
        raise ParseError("missing problem line")
    if declared_m != len(edges):
        log.info("problem line declares %d edges, found %d distinct", declared_m, len(edges))
    return Graph.from_edges(n, sorted(edges))


def write_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {g.n} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path], force: bool = False) -> Graph:
    return read_dimacs(Path(path).read_text(), force=force)


# ============================================================================
# COLORINGS
# ============================================================================

def read_coloring(text: str, n: int) -> Coloring:
    """
    Parse a coloring file for a graph on n vertices.

    Vertices without a line stay uncolored (0). Comment lines ("c ...")
    and status lines ("s ...") are skipped, so solver output reads back.

    Raises:
        ParseError: on a malformed line or a vertex listed twice
    """
    colors: List[int] = [0] * n
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        is_valid, error = validate_coloring_line(line, n)
        if not is_valid:
            raise ParseError(error, line_no)
        match = COLORING_PATTERN.match(line)
        vertex, color = int(match.group(1)) - 1, int(match.group(2))
        if vertex in seen:
            raise ParseError(f"vertex {vertex + 1} colored twice", line_no)
        seen.add(vertex)
        colors[vertex] = color
    return tuple(colors)


def write_coloring(c: Sequence[int]) -> str:
    return "".join(f"v {v + 1} {color}\n" for v, color in enumerate(c))
