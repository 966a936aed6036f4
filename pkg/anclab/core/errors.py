# anclab/core/errors.py
"""
Exception hierarchy shared by every anclab module.

Input problems (bad forests, bad files, bad parameters) raise subclasses of
AnclabError. Broken internal bounds of the labeling construction raise
SchemeAssertionError, which is also an AssertionError.
"""


class AnclabError(Exception):
    """Base exception for anclab errors."""
    pass


class ConfigError(AnclabError):
    """Invalid environment configuration."""
    pass


class ParamError(AnclabError, ValueError):
    """Parameter, level, triplet or label value outside its valid range."""
    pass


# ============================================================
# FOREST ERRORS
# ============================================================

class ForestError(AnclabError):
    """Forest is not a member of F(n, d)."""
    pass


class CycleDetected(ForestError):
    """Parent references contain a cycle."""

    def __init__(self, node: int):
        super().__init__(f"Cycle through node {node}")
        self.node = node


class UnknownParent(ForestError):
    """A parent reference names a node that does not exist."""

    def __init__(self, node: int, parent: int):
        super().__init__(f"Node {node} has unknown parent {parent}")
        self.node = node
        self.parent = parent


class DepthExceeded(ForestError):
    """Some node lies deeper than the depth bound."""

    def __init__(self, d: int, depth: int):
        super().__init__(f"Forest depth {depth} exceeds bound d={d}")
        self.d = d
        self.depth = depth


class ShapeError(ForestError):
    """Requested generator shape cannot be realized within (n, d)."""
    pass


class EnumerationTooLarge(ForestError):
    """Exhaustive enumeration requested for too many nodes."""
    pass


# ============================================================
# INGEST ERRORS
# ============================================================

class IngestError(AnclabError):
    """Input file could not be read as a forest."""
    pass


class MalformedLine(IngestError):
    pass


class DuplicateId(IngestError):
    pass


class XMLParseError(IngestError):
    """Document is outside the supported XML subset."""
    pass


class MismatchedTag(XMLParseError):
    pass


class UnclosedTag(XMLParseError):
    pass


class MalformedTag(XMLParseError):
    pass


class LabelFileError(AnclabError):
    """Label file header or rows are inconsistent."""
    pass


# ============================================================
# INTERNAL INVARIANTS
# ============================================================

class SchemeAssertionError(AnclabError, AssertionError):
    """A bound guaranteed by the construction was violated (implementation bug)."""
    pass


def check(condition: bool, message: str) -> None:
    """Raise SchemeAssertionError unless condition holds."""
    if not condition:
        raise SchemeAssertionError(message)
