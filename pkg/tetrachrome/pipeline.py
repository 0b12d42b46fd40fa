"""
Solver Pipeline

solve(g) decides whether a (P6,C5)-free graph is 4-colorable and, if it
is, returns a coloring of the input graph.

FLOW (per connected component):
1. Phase I: clean the component, contracting chromatic cutsets, or reject
   it with K5 / 9-antihole / (C1) / (C2) evidence
2. split the clean graph into atoms along clique cutsets
3. color each atom:
   - no 7-antihole: the atom is perfect with clique number at most 4
     (longer odd antiholes contain K5, long odd holes contain P6), so
     exact search always finds a 4-coloring
   - otherwise Phase II around the first 7-antihole
4. glue atom colorings back together, permuting each atom's colors to
   agree on its separator clique
5. undo the Phase I contractions, newest first
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from tetrachrome.cutsets import ContractionRecord, DecompositionTree, clique_cutset_decompose
from tetrachrome.detectors import check_size, find_antihole, find_forbidden
from tetrachrome.errors import ContractViolation, InputRejectedError
from tetrachrome.graph import (
    Coloring,
    Graph,
    UNCOLORED,
    bits,
    components,
    expand_through,
    induced,
    is_proper,
)
from tetrachrome.listcolor import dsatur_color
from tetrachrome.models import AtomOutcome, ContractionSummary, Evidence, SolveResult, SolveTrace
from tetrachrome.phase1 import clean_loop
from tetrachrome.phase2 import phase2_solve
from tetrachrome.trace import TraceLog, emit, vertex_labels

log = logging.getLogger("tetrachrome.pipeline")

COLORS = (1, 2, 3, 4)


# ============================================================================
# GLUING AND EXPANSION
# ============================================================================

def glue(parent: Sequence[int], child: Sequence[int], separator: Sequence[int]) -> Coloring:
    """
    Merge child into parent after renaming the child's colors so both
    agree on the separator. The first permutation in lexicographic order
    that works is used.

    Raises:
        ContractViolation: no permutation agrees on the separator
    """
    for perm in itertools.permutations(COLORS):
        rename = dict(zip(COLORS, perm))
        if all(rename[child[v]] == parent[v] for v in separator):
            break
    else:
        raise ContractViolation(f"no color permutation agrees on separator {list(separator)}", claim="glue")
    merged = list(parent)
    for v, color in enumerate(child):
        if color != UNCOLORED and merged[v] == UNCOLORED:
            merged[v] = rename[color]
    return tuple(merged)


def expand(coloring: Sequence[int], journal: Sequence[ContractionRecord]) -> Coloring:
    """Undo contractions newest first; every part takes its vertex's color."""
    out = tuple(coloring)
    for record in reversed(journal):
        out = expand_through(out, record.origin, record.parent_n)
    return out


# ============================================================================
# ATOMS
# ============================================================================

def _solve_atom(
    g: Graph, atom: int, trace: Optional[TraceLog], force: bool
) -> Tuple[Optional[Coloring], AtomOutcome]:
    """Color one atom; the coloring is indexed like g and 0 outside the atom."""
    sub, origin = induced(g, atom)
    antihole = find_antihole(sub, 7, force=True)
    if antihole is None:
        coloring = dsatur_color(sub, 4)
        if coloring is None:
            raise ContractViolation(f"atom {bits(atom)} without 7-antihole is not 4-colorable", claim="perfect")
        route = "exact"
    else:
        route = "phase2"
        try:
            coloring = phase2_solve(sub, antihole, trace=trace, force=force)
        except ContractViolation as exc:
            log.warning("phase II gave up on atom %s (%s); using exact search", bits(atom), exc.detail)
            coloring = dsatur_color(sub, 4)
            route = "fallback"

    outcome = AtomOutcome(
        atom=bits(atom),
        route=route,
        antihole=[origin[v][0] for v in antihole] if antihole else [],
        colorable=coloring is not None,
    )
    if coloring is None:
        return None, outcome
    return expand_through(coloring, origin, g.n), outcome


def _solve_clean(
    g: Graph, trace: Optional[TraceLog], force: bool
) -> Tuple[Optional[Coloring], List[AtomOutcome], Optional[Evidence]]:
    tree: DecompositionTree = clique_cutset_decompose(g)
    emit(trace, "decompose", atoms=len(tree.atoms))
    colorings = {}
    outcomes = []
    for i in tree.glue_order():
        coloring, outcome = _solve_atom(g, tree.atoms[i], trace, force)
        outcome = outcome.model_copy(update={"separator": bits(tree.separators[i])})
        outcomes.append(outcome)
        emit(
            trace,
            "atom",
            vertices=vertex_labels(g.labels, outcome.atom),
            route=outcome.route,
            colorable=outcome.colorable,
        )
        if coloring is None:
            evidence = Evidence(
                kind="exhaustion",
                witness=outcome.atom,
                antihole=outcome.antihole,
                detail="no base coloring of the antihole passes the neighborhood tests",
            )
            return None, outcomes, evidence
        colorings[i] = coloring

    merged = (UNCOLORED,) * g.n
    for i in tree.glue_order():
        merged = glue(merged, colorings[i], bits(tree.separators[i]))
    return merged, outcomes, None


# ============================================================================
# SOLVE
# ============================================================================

def _summary(record: ContractionRecord) -> ContractionSummary:
    parts = [bits(p) for p in record.partition.parts]
    return ContractionSummary(
        antihole=list(record.antihole),
        parts=parts,
        n_before=record.parent_n,
        n_after=len(record.origin),
    )


def solve(
    g: Graph,
    assume_free: bool = False,
    force: bool = False,
    trace: Optional[TraceLog] = None,
) -> SolveResult:
    """
    Decide 4-colorability of a (P6,C5)-free graph.

    Args:
        g: input graph
        assume_free: skip the P6/C5 check of the input
        force: run above the desk-scale ceiling
        trace: optional event log

    Returns:
        SolveResult with a verified coloring of g, or with evidence

    Raises:
        InputRejectedError: g contains an induced P6 or C5
        ContractViolation: an internal guarantee failed
    """
    check_size(g, force)
    if not assume_free:
        found = find_forbidden(g, force)
        if found is not None:
            kind, witness = found
            raise InputRejectedError(
                f"input contains an induced {kind}: {vertex_labels(g.labels, witness)}",
                kind=kind,
                witness=witness,
            )

    pieces = components(g)
    result_trace = SolveTrace(components=len(pieces))
    out = [UNCOLORED] * g.n
    for index, piece in enumerate(pieces):
        sub, origin = induced(g, piece)
        emit(trace, "component", index=index, n=sub.n)
        outcome, journal = clean_loop(sub, force=force, trace=trace)
        result_trace.contractions.extend(_summary(r) for r in journal)

        if outcome.kind == "not_colorable":
            evidence = outcome.evidence.model_copy(
                update={"detail": "witness " + ",".join(vertex_labels(outcome.graph.labels, outcome.evidence.witness))}
            )
            emit(trace, "solve", colorable=False, evidence=evidence.kind)
            return SolveResult(colorable=False, evidence=evidence, trace=result_trace)

        coloring, atoms, evidence = _solve_clean(outcome.graph, trace, force)
        result_trace.atoms.extend(atoms)
        if coloring is None:
            emit(trace, "solve", colorable=False, evidence=evidence.kind)
            return SolveResult(colorable=False, evidence=evidence, trace=result_trace)

        for v, color in enumerate(expand_through(expand(coloring, journal), origin, g.n)):
            if color != UNCOLORED:
                out[v] = color

    final = tuple(out)
    check = is_proper(g, final, require_total=True)
    if not check.ok:
        raise ContractViolation(f"final coloring fails the check: {check}", claim="final")
    emit(trace, "solve", colorable=True)
    log.info("4-colorable: %d components, %d contractions", len(pieces), len(result_trace.contractions))
    return SolveResult(colorable=True, coloring=list(final), trace=result_trace)


def solve_coloring(g: Graph, **kwargs) -> Optional[Coloring]:
    """The coloring from `solve`, or None when g is not 4-colorable."""
    result = solve(g, **kwargs)
    return tuple(result.coloring) if result.colorable else None

