"""
Input Validation Utilities

Checks for the text the CLI accepts: DIMACS problem/edge lines, coloring
lines, explicit antihole specs and generator flags. Invalid input is
rejected before any computation starts.

CONVENTION:
Every validator returns (is_valid, error_message):
- valid:   (True, None)
- invalid: (False, message)
Callers decide which exception to raise; the DIMACS reader turns a
failure into ParseError with the offending line number.
"""
import re
from typing import List, Optional, Sequence, Tuple

# ============================================================================
# VALIDATION PATTERNS
# ============================================================================

# p edge <n> <m>  ("col" is accepted as a synonym of "edge")
PROBLEM_PATTERN = re.compile(r'^p\s+(edge|col)\s+(\d+)\s+(\d+)\s*$')

# e <u> <v>
EDGE_PATTERN = re.compile(r'^e\s+(\d+)\s+(\d+)\s*$')

# v <id> <color>
COLORING_PATTERN = re.compile(r'^v\s+(\d+)\s+(\d+)\s*$')

PALETTE_SIZE = 4

ANTIHOLE_LENGTH = 7


# ============================================================================
# DIMACS LINES
# ============================================================================

def validate_problem_line(line: str) -> Tuple[bool, Optional[str]]:
    """
    Validate a DIMACS problem line.

    Rules:
    - Form `p edge n m` with non-negative integers
    - At least one vertex

    Args:
        line: The raw line, already stripped

    Returns:
        Tuple of (is_valid, error_message)
    """
    match = PROBLEM_PATTERN.match(line)
    if not match:
        return False, f"malformed problem line: {line!r}"
    if int(match.group(2)) < 1:
        return False, "graph must have at least one vertex"
    return True, None


def validate_edge_line(line: str, n: int) -> Tuple[bool, Optional[str]]:
    """
    Validate a DIMACS edge line against the declared vertex count.

    Rules:
    - Form `e u v`, ids 1-based and within 1..n
    - No self-loops
    """
    match = EDGE_PATTERN.match(line)
    if not match:
        return False, f"malformed edge line: {line!r}"
    u, v = int(match.group(1)), int(match.group(2))
    for end in (u, v):
        if not 1 <= end <= n:
            return False, f"vertex {end} outside 1..{n}"
    if u == v:
        return False, f"self-loop at vertex {u}"
    return True, None


# ============================================================================
# COLORINGS
# ============================================================================

def validate_color(color: int) -> Tuple[bool, Optional[str]]:
    if not 1 <= color <= PALETTE_SIZE:
        return False, f"color {color} outside 1..{PALETTE_SIZE}"
    return True, None


def validate_coloring_line(line: str, n: int) -> Tuple[bool, Optional[str]]:
    """
    Validate one `v <id> <color>` line of a coloring file.

    Args:
        line: The raw line, already stripped
        n: Vertex count of the graph the coloring belongs to

    Returns:
        Tuple of (is_valid, error_message)
    """
    match = COLORING_PATTERN.match(line)
    if not match:
        return False, f"malformed coloring line: {line!r}"
    vertex, color = int(match.group(1)), int(match.group(2))
    if not 1 <= vertex <= n:
        return False, f"vertex {vertex} outside 1..{n}"
    return validate_color(color)


# ============================================================================
# CLI ARGUMENTS
# ============================================================================

def parse_antihole_spec(spec: str) -> List[int]:
    """Split a comma-separated 1-based vertex list into 0-based ids."""
    return [int(part) - 1 for part in spec.split(",")]


def validate_antihole_spec(spec: str, n: int) -> Tuple[bool, Optional[str]]:
    """
    Validate the `--antihole` argument of the phase2 subcommand.

    Rules:
    - Exactly 7 comma-separated 1-based vertex ids
    - All distinct and within 1..n
    """
    if not spec or not spec.strip():
        return False, "antihole cannot be empty"
    parts = [p.strip() for p in spec.split(",")]
    if len(parts) != ANTIHOLE_LENGTH:
        return False, f"antihole needs exactly {ANTIHOLE_LENGTH} vertices, got {len(parts)}"
    if not all(p.isdigit() for p in parts):
        return False, "antihole vertices must be positive integers"
    ids = [int(p) for p in parts]
    if len(set(ids)) != len(ids):
        return False, "antihole vertices must be distinct"
    for v in ids:
        if not 1 <= v <= n:
            return False, f"vertex {v} outside 1..{n}"
    return True, None


def validate_probability(p: float) -> Tuple[bool, Optional[str]]:
    if not 0.0 <= p <= 1.0:
        return False, f"edge probability {p} outside [0, 1]"
    return True, None


def validate_preset(name: Optional[str], known: Sequence[str]) -> Tuple[bool, Optional[str]]:
    if name is None:
        return True, None
    if name not in known:
        return False, f"unknown preset {name!r}; choose from {', '.join(known)}"
    return True, None
