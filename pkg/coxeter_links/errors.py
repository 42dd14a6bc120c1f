"""
Exception hierarchy for the Coxeter links toolkit.

Every failure carries a symbolic error code and the process exit status the
command-line front end reports for it.
"""

from typing import Any, Dict, Optional


class CoxeterLinkError(Exception):
    """Base class for all toolkit failures."""

    error_code = "PROCESSING_ERROR"
    exit_code = 5

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_record(self) -> Dict[str, Any]:
        """Error record in the shape the CLI prints for machine output."""
        record: Dict[str, Any] = {"error": self.message, "error_code": self.error_code}
        if self.details:
            record["details"] = self.details
        return record


class DocumentParseError(CoxeterLinkError):
    error_code = "PARSE_ERROR"
    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 location: Optional[str] = None):
        position = []
        if line is not None:
            position.append(f"line {line}")
        if column is not None:
            position.append(f"column {column}")
        if location:
            position.append(f"at {location}")
        full = f"{message} ({', '.join(position)})" if position else message
        details = {k: v for k, v in (("line", line), ("column", column), ("location", location)) if v is not None}
        super().__init__(full, details)
        self.line = line
        self.column = column
        self.location = location


class InvalidDiagramError(CoxeterLinkError):
    error_code = "INVALID_DIAGRAM"
    exit_code = 2


class InvalidGraphError(CoxeterLinkError):
    error_code = "INVALID_GRAPH"
    exit_code = 2


class MalformedMatrixError(CoxeterLinkError):
    error_code = "MALFORMED_MATRIX"
    exit_code = 2


class InvalidMoveError(CoxeterLinkError):
    error_code = "INVALID_MOVE"
    exit_code = 2


class CyclicRelationError(CoxeterLinkError):
    error_code = "CYCLIC_RELATION"
    exit_code = 2


class NotCoxeterTypeError(CoxeterLinkError):
    error_code = "NOT_COXETER_TYPE"
    exit_code = 2


class NotRealizableError(CoxeterLinkError):
    error_code = "NOT_REALIZABLE"
    exit_code = 3


class BudgetExceededError(CoxeterLinkError):
    error_code = "BUDGET_EXCEEDED"
    exit_code = 4

    def __init__(self, message: str, examined: int = 0, budget: int = 0):
        super().__init__(message, {"examined": examined, "budget": budget})
        self.examined = examined
        self.budget = budget


class RootFindingError(CoxeterLinkError):
    error_code = "ROOT_FINDING_FAILED"
    exit_code = 5

    def __init__(self, message: str, best_residual: float):
        super().__init__(message, {"best_residual": best_residual})
        self.best_residual = best_residual


class TheoremViolationError(CoxeterLinkError):
    """An identity that must hold for every input failed: the toolkit has a bug."""

    error_code = "THEOREM_VIOLATION"
    exit_code = 5


class ChordIndexError(IndexError):
    """Chord or vertex index outside the valid range."""
