"""Exception hierarchy shared by all cyclord modules."""


class CyclordError(Exception):
    """Base class for all library errors."""


class Degenerate(CyclordError):
    """A triple with a repeated vertex where three distinct ones are required."""


class InvalidSize(CyclordError):
    """Vertex count outside the operation's valid range."""


class NotTTEmbedded(CyclordError):
    """Operation requires every edge to carry the ascending orientation."""


class SizeMismatch(CyclordError):
    """Two structures that must share a vertex count do not."""


class CapExceeded(CyclordError):
    """A configured search or enumeration budget was exhausted."""


class AsymmetryViolation(CyclordError):
    """Both cyclic orientations of one 3-set were supplied."""

    def __init__(self, support, message=None):
        self.support = tuple(support)
        super().__init__(message or f"both orientations given for {self.support}")


class NotSelfTransitive(CyclordError):
    """Input fails the self-transitivity precondition of a recovery step."""


class NotHypertournament(CyclordError):
    """Operation requires every 3-set to be oriented."""


class NotTransitive(CyclordError):
    """Operation requires a transitive oriented 3-hypergraph."""


class SupportOverlap(CyclordError):
    """Union operands orient a common 3-set."""


class SupportIncomplete(CyclordError):
    """Union operands leave some 3-set unoriented."""


class ParseError(CyclordError):
    """Malformed instance text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalContradiction(CyclordError):
    """A structural guarantee failed at runtime.

    Raised instead of silently continuing when a verified construction
    (e.g. a union of transitive orientations) does not have the property
    it provably must have; signals corrupted input or a genuine bug.
    """
