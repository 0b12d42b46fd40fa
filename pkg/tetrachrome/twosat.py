"""
2SAT

Satisfiability and model extraction for 2-CNF formulas through the
implication graph: clause (a or b) contributes not-a -> b and not-b -> a.
The formula is unsatisfiable exactly when some variable shares a strongly
connected component with its negation.

LITERALS:
Variable v is literal 2v, its negation 2v + 1; `neg` flips the low bit.
Unit clauses are stored as (l or l).
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from tetrachrome.errors import ContractViolation, UsageError


def lit(var: int, positive: bool = True) -> int:
    return 2 * var + (0 if positive else 1)


def neg(literal: int) -> int:
    return literal ^ 1


def lit_value(assignment: Sequence[bool], literal: int) -> bool:
    value = assignment[literal >> 1]
    return value if literal & 1 == 0 else not value


@dataclass
class TwoSatInstance:
    num_vars: int
    clauses: List[Tuple[int, int]] = field(default_factory=list)

    def add_clause(self, a: int, b: Optional[int] = None) -> None:
        if b is None:
            b = a
        for literal in (a, b):
            if not 0 <= literal >> 1 < self.num_vars:
                raise UsageError(f"literal {literal} refers to a variable outside 0..{self.num_vars - 1}")
        self.clauses.append((a, b))

    def add_implication(self, a: int, b: int) -> None:
        """a -> b, i.e. (not-a or b)."""
        self.add_clause(neg(a), b)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(lit_value(assignment, a) or lit_value(assignment, b) for a, b in self.clauses)


def _components(graph: List[List[int]]) -> List[int]:
    """
    Iterative lowlink SCC. Components are numbered in the order they are
    completed, which is a reverse topological order of the condensation.
    """
    size = len(graph)
    preorder = [0] * size
    lowlink = [0] * size
    comp = [-1] * size
    next_edge = [0] * size
    pending: List[int] = []
    counter = 0
    found = 0
    for source in range(size):
        if preorder[source]:
            continue
        queue = [source]
        while queue:
            v = queue[-1]
            if not preorder[v]:
                counter += 1
                preorder[v] = lowlink[v] = counter
            descended = False
            edges = graph[v]
            while next_edge[v] < len(edges):
                w = edges[next_edge[v]]
                next_edge[v] += 1
                if not preorder[w]:
                    queue.append(w)
                    descended = True
                    break
                if comp[w] < 0:
                    lowlink[v] = min(lowlink[v], lowlink[w] if preorder[w] > preorder[v] else preorder[w])
            if descended:
                continue
            queue.pop()
            if queue:
                parent = queue[-1]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == preorder[v]:
                comp[v] = found
                while pending and preorder[pending[-1]] > preorder[v]:
                    comp[pending.pop()] = found
                found += 1
            else:
                pending.append(v)
    return comp


def solve_2sat(inst: TwoSatInstance) -> Optional[List[bool]]:
    """
    Returns:
        A satisfying assignment (one bool per variable), or None if the
        formula is unsatisfiable. The assignment is re-checked against
        every clause before it is returned.
    """
    graph: List[List[int]] = [[] for _ in range(2 * inst.num_vars)]
    for a, b in inst.clauses:
        graph[neg(a)].append(b)
        if a != b:
            graph[neg(b)].append(a)
    comp = _components(graph)
    assignment = []
    for var in range(inst.num_vars):
        pos, negated = comp[lit(var)], comp[lit(var, False)]
        if pos == negated:
            return None
        # completed earlier = later in topological order
        assignment.append(pos < negated)
    if not inst.satisfied_by(assignment):
        raise ContractViolation("2SAT model fails a clause", claim="2sat")
    return assignment
