"""
Oracle, Generator and Differential Harness

Independent ground truth for the solver:
- brute_k_colorable: plain backtracking, no cleverness to share bugs with
- generate_free / preset_graph: seeded (P6,C5)-free instances
- differential_run: solver verdict vs oracle verdict over a corpus

GENERATION:
A G(n, p) sample is repaired until it has no induced P6 or C5. The
default repair adds a random missing edge among the vertices of the
forbidden witness; after REPAIR_LIMIT chords it switches to deleting a
witness vertex. The largest component is returned, renumbered 1..n.
Presets build the shapes a random sample rarely hits: antiholes,
complete multipartite graphs, antiholes with attachments, and clique
cutset chains.
"""
import itertools
import logging
import random
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Deque, List, Optional, Sequence, Tuple, Union

import networkx as nx

from tetrachrome import config
from tetrachrome.budget import Budget, unlimited
from tetrachrome.detectors import find_forbidden, is_free
from tetrachrome.dimacs import load_graph, write_dimacs
from tetrachrome.errors import ContractViolation, GenerationError, TetrachromeError, UsageError
from tetrachrome.graph import Coloring, Graph, components, induced, is_clique, is_proper, iter_bits
from tetrachrome.models import DiffEntry, DiffReport, GenSpec
from tetrachrome.pipeline import solve_coloring

log = logging.getLogger("tetrachrome.oracle")

Solver = Callable[[Graph], Optional[Coloring]]
Corpus = Sequence[Tuple[str, Graph]]

PRESETS = ("antihole7", "antihole9", "multipartite", "antihole7-attached", "cutset-chain")


# ============================================================================
# BRUTE FORCE
# ============================================================================

def brute_k_colorable(g: Graph, k: int = 4) -> Optional[Coloring]:
    """
    Exact k-coloring by backtracking in vertex order. A vertex may only
    open the next unused color.

    Raises:
        UsageError: k = 4 and g is above ORACLE_MAX_VERTICES
    """
    if k < 1:
        raise UsageError("k must be positive")
    if k == 4 and g.n > config.ORACLE_MAX_VERTICES:
        raise UsageError(f"oracle is capped at {config.ORACLE_MAX_VERTICES} vertices for k=4, got {g.n}")
    colors = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[u] for u in iter_bits(g.rows[v]) if u < v}
        for color in range(1, min(k, used + 1) + 1):
            if color not in taken:
                colors[v] = color
                if place(v + 1, max(used, color)):
                    return True
        colors[v] = 0
        return False

    if not place(0, 0):
        return None
    result = tuple(colors)
    if not is_proper(g, result, require_total=True, k=k).ok:
        raise ContractViolation("oracle coloring is not proper", claim="oracle")
    return result


# ============================================================================
# PRESETS
# ============================================================================

def antihole(k: int) -> Graph:
    """Complement of the cycle C_k, vertices in cyclic order."""
    return _from_nx(nx.complement(nx.cycle_graph(k)))


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def _with_vertex(g: Graph, row: int) -> Graph:
    edges = list(g.edges()) + [(u, g.n) for u in iter_bits(row)]
    return Graph.from_edges(g.n + 1, edges)


def _grow_free(g: Graph, target: int, rng: random.Random, pick_row: Callable[[Graph], int]) -> Graph:
    """Add vertices with rows from pick_row while the graph stays free."""
    tries = 0
    while g.n < target and tries < 20 * target:
        tries += 1
        row = pick_row(g)
        if not row:
            continue
        grown = _with_vertex(g, row)
        if is_free(grown, force=True):
            g = grown
    return g


def _attachment_row(rng: random.Random, p: float) -> Callable[[Graph], int]:
    def pick(g: Graph) -> int:
        kind = rng.choice(("leaf", "small", "big", "random"))
        start = rng.randrange(7)
        if kind == "leaf":
            on_c = [start]
        elif kind == "small":
            on_c = [(start + t) % 7 for t in range(rng.choice((2, 3, 4)))]
        elif kind == "big":
            on_c = [(start + t) % 7 for t in range(rng.choice((5, 6)))]
        else:
            on_c = [i for i in range(7) if rng.random() < p]
        row = sum(1 << i for i in on_c)
        for v in range(7, g.n):
            if rng.random() < p:
                row |= 1 << v
        return row

    return pick


def _clique_row(rng: random.Random) -> Callable[[Graph], int]:
    """A new vertex complete to a random clique of size 1..3."""

    def pick(g: Graph) -> int:
        for _ in range(10):
            q = 0
            for v in rng.sample(range(g.n), min(g.n, rng.randint(1, 3))):
                q |= 1 << v
            if is_clique(g, q):
                return q
        return 1 << rng.randrange(g.n)

    return pick


def preset_graph(name: str, rng: random.Random, n: int = 7, p: float = 0.5) -> Graph:
    """
    Build a preset instance. n is a target size for the growing presets
    and ignored by the fixed ones.

    Raises:
        UsageError: unknown preset
    """
    if name == "antihole7":
        return antihole(7)
    if name == "antihole9":
        return antihole(9)
    if name == "multipartite":
        parts = rng.randint(2, 5)
        sizes = [1] * parts
        for _ in range(max(0, n - parts)):
            sizes[rng.randrange(parts)] += 1
        return _from_nx(nx.complete_multipartite_graph(*sizes))
    if name == "antihole7-attached":
        return _grow_free(antihole(7), n, rng, _attachment_row(rng, p))
    if name == "cutset-chain":
        base = _grow_free(antihole(7), max(7, n // 2), rng, _attachment_row(rng, p))
        return _grow_free(base, n, rng, _clique_row(rng))
    raise UsageError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")


# ============================================================================
# RANDOM GENERATION
# ============================================================================

def _delete(g: Graph, v: int) -> Graph:
    sub, _ = induced(g, g.vertices & ~(1 << v))
    return sub


def _repair(g: Graph, mode: str, rng: random.Random) -> Optional[Graph]:
    chords = 0
    while True:
        found = find_forbidden(g, force=True)
        if found is None:
            return g
        if mode == "resample":
            return None
        witness = found[1]
        if mode == "chord" and chords < config.REPAIR_LIMIT:
            missing = [(u, v) for u, v in itertools.combinations(witness, 2) if not g.adjacent(u, v)]
            u, v = rng.choice(missing)
            g = Graph.from_edges(g.n, list(g.edges()) + [(u, v)])
            chords += 1
        else:
            g = _delete(g, rng.choice(witness))


def _largest_component(g: Graph) -> Graph:
    if g.n == 0:
        return g
    best = max(components(g), key=lambda c: c.bit_count())
    sub, _ = induced(g, best)
    return Graph(sub.n, sub.rows)


def generate_free(spec: GenSpec) -> Graph:
    """
    A connected (P6,C5)-free graph, fully determined by spec.

    Raises:
        UsageError: unknown preset
        GenerationError: no attempt produced a usable graph
    """
    rng = random.Random(spec.seed)
    if spec.preset is not None:
        g = preset_graph(spec.preset, rng, spec.n, spec.p)
        if not is_free(g, force=True):
            raise GenerationError(f"preset {spec.preset} produced a graph with P6 or C5")
        return g
    for attempt in range(spec.max_attempts):
        sample = nx.gnp_random_graph(spec.n, spec.p, seed=rng.randrange(2 ** 32))
        repaired = _repair(_from_nx(sample), spec.repair, rng)
        if repaired is None or repaired.n == 0:
            continue
        g = _largest_component(repaired)
        log.debug("generated n=%d after %d attempts", g.n, attempt + 1)
        return g
    raise GenerationError(f"no (P6,C5)-free graph after {spec.max_attempts} attempts")


# ============================================================================
# CORPUS AND DIFFERENTIAL TESTING
# ============================================================================

def load_corpus(directory: Union[str, Path]) -> List[Tuple[str, Graph]]:
    """Every *.col file in directory, sorted by name."""
    return [(path.name, load_graph(path)) for path in sorted(Path(directory).glob("*.col"))]


def serialize_reproducer(name: str, g: Graph) -> str:
    return write_dimacs(g, comments=[f"reproducer for {name}"])


def check_instance(name: str, g: Graph, solver: Solver = solve_coloring) -> DiffEntry:
    """Compare solver and oracle on one graph."""
    expected = brute_k_colorable(g, 4) is not None
    got: Optional[bool] = None
    error = None
    try:
        coloring = solver(g)
        got = coloring is not None
        if coloring is not None and not is_proper(g, coloring, require_total=True).ok:
            error = "improper coloring"
    except TetrachromeError as exc:
        error = f"{type(exc).__name__}: {exc.detail}"
    entry = DiffEntry(name=name, n=g.n, expected=expected, got=got, error=error)
    if not entry.ok:
        log.warning("mismatch on %s: oracle=%s solve=%s %s", name, expected, got, error or "")
        entry = entry.model_copy(update={"reproducer": serialize_reproducer(name, g)})
    return entry


def differential_run(
    corpus: Corpus,
    budget: Optional[Budget] = None,
    solver: Solver = solve_coloring,
    jobs: int = 1,
) -> DiffReport:
    """
    Solver vs oracle over the corpus, in corpus order.

    The budget is asked before each instance is started, so a time limit
    stops the run between instances. With jobs > 1 at most `jobs`
    instances are in flight; the report keeps corpus order either way.
    """
    if budget is None:
        budget = unlimited()
    entries: List[DiffEntry] = []
    exhausted = False

    def admit() -> bool:
        nonlocal exhausted
        allowed, reason = budget.check()
        if not allowed:
            log.info(reason)
            exhausted = True
        return allowed

    if jobs <= 1:
        for name, g in corpus:
            if not admit():
                break
            entries.append(check_instance(name, g, solver))
        return DiffReport(entries=entries, budget_exhausted=exhausted)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        in_flight: Deque[Future] = deque()
        for name, g in corpus:
            if not admit():
                break
            in_flight.append(pool.submit(check_instance, name, g, solver))
            if len(in_flight) >= jobs:
                entries.append(in_flight.popleft().result())
        entries.extend(f.result() for f in in_flight)
    return DiffReport(entries=entries, budget_exhausted=exhausted)

