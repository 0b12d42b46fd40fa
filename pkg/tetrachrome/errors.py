"""
Error Types

Every failure the library can report is a TetrachromeError carrying a
human-readable detail and the process exit code the CLI should use.
Library code only raises; cli.main is the single place that turns an
exception into an exit code.

EXIT CODES:
- 0: graph is 4-colorable (or check passed)
- 1: graph is not 4-colorable (or check failed)
- 2: input rejected (parse error, contains P6/C5, bad usage)
- 3: internal contract violation
"""
from typing import Optional, Sequence

EXIT_COLORABLE = 0
EXIT_NOT_COLORABLE = 1
EXIT_REJECTED = 2
EXIT_CONTRACT = 3


class TetrachromeError(Exception):
    """Base class; mirrors an HTTP error's (status, detail) pair."""

    exit_code = EXIT_REJECTED

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(TetrachromeError):
    exit_code = EXIT_REJECTED


class ParseError(UsageError):
    def __init__(self, detail: str, line_no: Optional[int] = None):
        if line_no is not None:
            detail = f"line {line_no}: {detail}"
        super().__init__(detail)
        self.line_no = line_no


class ProblemSizeError(UsageError):
    pass


class InputRejectedError(TetrachromeError):
    """The input is not (P6,C5)-free; `witness` re-verifies against the graph."""

    exit_code = EXIT_REJECTED

    def __init__(self, detail: str, kind: str = "", witness: Sequence[int] = ()):
        super().__init__(detail)
        self.kind = kind
        self.witness = tuple(witness)


class InputNotFreeError(InputRejectedError):
    """A structural claim that holds for every (P6,C5)-free graph failed mid-run."""

    def __init__(self, detail: str, claim: str = "", witness: Sequence[int] = ()):
        super().__init__(detail, kind="claim", witness=witness)
        self.claim = claim


class ContractViolation(TetrachromeError):
    exit_code = EXIT_CONTRACT

    def __init__(self, detail: str, claim: str = ""):
        if claim:
            detail = f"[{claim}] {detail}"
        super().__init__(detail)
        self.claim = claim


class NiceColoringError(ContractViolation):
    pass


class GenerationError(TetrachromeError):
    exit_code = EXIT_REJECTED
