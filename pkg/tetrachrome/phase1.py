"""
Phase I: Cleaning

One step either proves the graph is not 4-colorable (K5, 9-antihole,
(C1) or (C2) failure), certifies it clean, or shrinks it by contracting
the chromatic cutset around the first dirty component. The loop repeats
steps until the graph is rejected or clean; every contraction is kept in
a journal so colorings of the final graph can be expanded back.
"""
import logging
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from tetrachrome import config
from tetrachrome.cutsets import ContractionRecord, contract_chromatic, find_chromatic_partition
from tetrachrome.detectors import check_clean, check_size, classify_attachment, find_forbidden
from tetrachrome.errors import ContractViolation
from tetrachrome.graph import Graph, is_connected, to_mask
from tetrachrome.models import CleanReport, Evidence
from tetrachrome.trace import TraceLog, emit, vertex_labels

log = logging.getLogger("tetrachrome.phase1")

OutcomeKind = Literal["not_colorable", "clean", "reduced"]


@dataclass(frozen=True)
class Phase1Outcome:
    kind: OutcomeKind
    graph: Graph
    report: CleanReport
    evidence: Optional[Evidence] = None
    record: Optional[ContractionRecord] = None


def clean_step(
    g: Graph,
    force: bool = False,
    verify_below: Optional[int] = None,
    trace: Optional[TraceLog] = None,
) -> Phase1Outcome:
    """
    Run one cleaning step on a connected (P6,C5)-free graph.

    Args:
        g: the current graph
        force: run above the desk-scale ceiling
        verify_below: re-check (P6,C5)-freeness of a reduced graph with
            fewer vertices than this (defaults to config.VERIFY_BELOW)
        trace: optional event log

    Returns:
        Phase1Outcome of kind not_colorable, clean or reduced

    Raises:
        InputNotFreeError: a structural claim failed on the way
        ContractViolation: the reduction broke one of its guarantees
    """
    check_size(g, force)
    if verify_below is None:
        verify_below = config.VERIFY_BELOW
    report = check_clean(g, force)

    if report.rejects:
        evidence = report.evidence
        emit(trace, "phase1.reject", evidence=evidence.kind, witness=vertex_labels(g.labels, evidence.witness))
        log.info("phase I rejects: %s %s", evidence.kind, evidence.witness)
        return Phase1Outcome("not_colorable", g, report, evidence=evidence)
    if report.is_clean:
        emit(trace, "phase1.clean", n=g.n, antiholes=len(report.records))
        return Phase1Outcome("clean", g, report)

    ctx = classify_attachment(g, report.antihole)
    partition = find_chromatic_partition(g, ctx, to_mask(report.component))
    reduced, record = contract_chromatic(g, partition, report.antihole)

    if reduced.n >= g.n:
        raise ContractViolation("contraction did not shrink the graph", claim="progress")
    if not is_connected(reduced):
        raise ContractViolation("contraction disconnected the graph", claim="progress")
    if reduced.n < verify_below:
        found = find_forbidden(reduced, force=True)
        if found is not None:
            raise ContractViolation(f"reduced graph contains {found[0]} {found[1]}", claim="contraction")

    emit(
        trace,
        "phase1.step",
        antihole=vertex_labels(g.labels, report.antihole),
        component=vertex_labels(g.labels, report.component),
        parts=[p.bit_count() for p in partition.parts],
        n=reduced.n,
    )
    log.info("phase I contracts %d parts: n %d -> %d", len(partition.parts), g.n, reduced.n)
    return Phase1Outcome("reduced", reduced, report, record=record)


def clean_loop(
    g: Graph,
    force: bool = False,
    verify_below: Optional[int] = None,
    trace: Optional[TraceLog] = None,
) -> Tuple[Phase1Outcome, List[ContractionRecord]]:
    """
    Repeat clean_step until the graph is rejected or clean.

    Returns:
        (final outcome, journal) where the journal lists the contractions
        in the order they were applied
    """
    journal: List[ContractionRecord] = []
    current = g
    for _ in range(g.n + 1):
        outcome = clean_step(current, force, verify_below, trace)
        if outcome.kind != "reduced":
            return outcome, journal
        journal.append(outcome.record)
        current = outcome.graph
    raise ContractViolation(f"cleaning did not finish within {g.n} steps", claim="progress")
