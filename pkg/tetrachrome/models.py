"""
Result Models (pydantic)

Outward-facing records: what the solver, the cleaner and the test harness
report. Vertex ids in these models are 0-based ids of the graph the
record talks about; the CLI converts to 1-based ids on output.
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

EvidenceKind = Literal["K5", "antihole9", "C1", "C2", "exhaustion"]
CleanVerdict = Literal["clean", "K5", "antihole9", "C1", "C2", "dirty"]
AtomRoute = Literal["exact", "phase2", "fallback"]
RepairMode = Literal["chord", "delete", "resample"]


class Evidence(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: EvidenceKind
    witness: List[int] = Field(default_factory=list)
    antihole: List[int] = Field(default_factory=list)
    detail: str = ""


class AntiholeRecord(BaseModel):
    """Per-antihole outcome of the clean check."""

    model_config = ConfigDict(frozen=True)

    antihole: List[int]
    verdict: Literal["clean", "C1", "C2", "dirty"]
    witness: List[int] = Field(default_factory=list)


class CleanReport(BaseModel):
    verdict: CleanVerdict
    evidence: Optional[Evidence] = None
    antihole: List[int] = Field(default_factory=list)
    component: List[int] = Field(default_factory=list)
    records: List[AntiholeRecord] = Field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return self.verdict == "clean"

    @property
    def rejects(self) -> bool:
        return self.evidence is not None


class ContractionSummary(BaseModel):
    antihole: List[int]
    parts: List[List[int]]
    n_before: int
    n_after: int


class AtomOutcome(BaseModel):
    atom: List[int]
    separator: List[int] = Field(default_factory=list)
    route: AtomRoute
    antihole: List[int] = Field(default_factory=list)
    colorable: bool


class SolveTrace(BaseModel):
    components: int = 0
    contractions: List[ContractionSummary] = Field(default_factory=list)
    atoms: List[AtomOutcome] = Field(default_factory=list)


class SolveResult(BaseModel):
    colorable: bool
    coloring: Optional[List[int]] = None
    evidence: Optional[Evidence] = None
    trace: SolveTrace = Field(default_factory=SolveTrace)


class GenSpec(BaseModel):
    """Parameters of one generated instance; same spec, same graph."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = 0
    repair: RepairMode = "chord"
    max_attempts: int = Field(default=200, ge=1)
    preset: Optional[str] = None


class DiffEntry(BaseModel):
    name: str
    n: int
    expected: bool
    got: Optional[bool] = None
    error: Optional[str] = None
    reproducer: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.got == self.expected


class DiffReport(BaseModel):
    entries: List[DiffEntry] = Field(default_factory=list)
    budget_exhausted: bool = False

    @property
    def mismatches(self) -> List[DiffEntry]:
        return [e for e in self.entries if not e.ok]

    def lines(self) -> List[str]:
        """Newline-delimited records, one per entry, then a summary."""
        out = []
        for e in self.entries:
            status = "ok" if e.ok else "MISMATCH"
            got = "error" if e.got is None else str(e.got).lower()
            out.append(f"{status} {e.name} n={e.n} oracle={str(e.expected).lower()} solve={got}"
                       + (f" error={e.error}" if e.error else ""))
        out.append(f"checked={len(self.entries)} mismatches={len(self.mismatches)}"
                   + (" budget=exhausted" if self.budget_exhausted else ""))
        return out


class CliConfig(BaseModel):
    command: str
    inputs: List[str] = Field(default_factory=list)
    output: Optional[str] = None
    force: bool = False
    assume_free: bool = False
    trace: bool = False
    seed: int = 0
    verbosity: int = Field(default=0, ge=0)
    jobs: int = Field(default=1, ge=1)
