# ----------------------------------------------------------
# Domination Lab
# File: domlab/exceptions.py
# ----------------------------------------------------------
# Description:
# Defines a structured exception hierarchy for the domination lab.
# Each subclass targets a specific error domain such as graph
# editing, graph6 decoding, gadget construction, certification,
# claim lookup, configuration, or report persistence.
#
# Budget exhaustion is never raised: solvers report it as a status.
# ----------------------------------------------------------

from typing import Optional


class DomlabError(Exception):
    """Base class for all domination-lab exceptions."""
    def __init__(self, message: str = "An unexpected domination lab error occurred"):
        super().__init__(message)


class ValidationError(DomlabError):
    """Raised when a parameter or user input fails validation."""
    def __init__(self, message: str = "Invalid input provided"):
        super().__init__(message)


class GraphError(DomlabError):
    """Raised when a vertex or edge occurrence does not belong to a graph."""
    def __init__(self, message: str = "Invalid graph operation"):
        super().__init__(message)


class Graph6ParseError(DomlabError):
    """Raised when a graph6 line cannot be decoded; carries the byte offset."""
    def __init__(self, message: str = "Malformed graph6 data", offset: int = 0,
                 line: Optional[str] = None):
        self.offset = offset
        self.line = line
        super().__init__(f"{message} (byte offset {offset})")


class ConstructionError(DomlabError):
    """Raised when a gadget or family cannot be built as requested."""
    def __init__(self, message: str = "Construction failed"):
        super().__init__(message)


class SolverError(DomlabError):
    """Raised when a solver precondition (e.g. the brute-force cap) is violated."""
    def __init__(self, message: str = "Solver precondition violated"):
        super().__init__(message)


class CertificationError(DomlabError):
    """Raised when a compositional certificate is refused."""
    def __init__(self, message: str = "Certification refused",
                 occurrence_index: Optional[int] = None, reason: str = ""):
        self.occurrence_index = occurrence_index
        self.reason = reason
        super().__init__(message)


class ClaimError(DomlabError):
    """Raised for unknown claim identifiers or malformed claim selections."""
    def __init__(self, message: str = "Unknown claim"):
        super().__init__(message)


class ConfigError(DomlabError):
    """Raised when configuration (.env or constructor settings) is invalid."""
    def __init__(self, message: str = "Configuration error"):
        super().__init__(message)


class ReportError(DomlabError):
    """Raised for report persistence issues."""
    def __init__(self, message: str = "Report persistence error"):
        super().__init__(message)


__all__ = [
    "DomlabError",
    "ValidationError",
    "GraphError",
    "Graph6ParseError",
    "ConstructionError",
    "SolverError",
    "CertificationError",
    "ClaimError",
    "ConfigError",
    "ReportError",
]
