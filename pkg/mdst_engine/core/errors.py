"""
Domain exceptions.

Input problems subclass ValueError, algorithmic failures subclass RuntimeError,
so callers can keep catching broadly.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from mdst_engine.models.tree import SpanningTree


class MDSTError(Exception):
    """Base class for all mdst-engine errors"""


# Graph parsing


class GraphFormatError(MDSTError, ValueError):
    """Malformed graph input; `line` is 1-based, None when not tied to a line"""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class SelfLoop(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class Disconnected(GraphFormatError):
    pass


class BadHeader(GraphFormatError):
    pass


class IdOutOfRange(GraphFormatError):
    pass


# Spanning tree


class TreeError(MDSTError, ValueError):
    pass


class SameVertex(TreeError):
    pass


class NotOnCycle(TreeError):
    pass


class AlreadyTreeEdge(TreeError):
    pass


class InvalidTree(TreeError):
    pass


# Disjoint sets


class IndexOutOfRange(MDSTError, IndexError):
    pass


# Dynamic forest


class ForestError(MDSTError, ValueError):
    pass


class WouldCreateCycle(ForestError):
    pass


class NotAForestEdge(ForestError):
    pass


class NotConnected(ForestError):
    pass


# Augmentor


class LayeringError(MDSTError, ValueError):
    pass


class ThresholdTooSmall(LayeringError):
    pass


class EmptySk(LayeringError):
    pass


class InvalidSequence(MDSTError, ValueError):
    def __init__(self, message: str, violations: list[str] | None = None):
        self.violations = violations or [message]
        super().__init__(message)


class InvariantViolation(MDSTError, RuntimeError):
    """A property the analysis guarantees did not hold at runtime"""


# Certificates


class CertificateError(MDSTError, ValueError):
    """Certificate rejected; `witness` names the offending object"""

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class NotTerminal(CertificateError):
    pass


class ComponentNotConnected(CertificateError):
    pass


class ComponentsOverlap(CertificateError):
    pass


class UncoveredBoundaryEdge(CertificateError):
    pass


class BoundOverclaimed(CertificateError):
    pass


class MalformedCertificate(CertificateError):
    pass


# Oracle and driver


class OracleError(MDSTError, ValueError):
    pass


class TooLarge(OracleError):
    pass


class BadParams(OracleError):
    pass


class TimedOut(MDSTError, RuntimeError):
    """Wall time limit hit; `tree` is the best tree found so far"""

    def __init__(self, message: str, tree: SpanningTree):
        self.tree = tree
        super().__init__(message)
