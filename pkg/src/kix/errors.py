"""Exception hierarchy shared by every kix module."""


class KixError(Exception):
    """Base class for all toolkit errors."""


class GraphError(KixError, ValueError):
    """Raised when a graph description is not a valid plane multigraph."""


class LoopEdge(GraphError):
    pass


class MultiplicityExceeded(GraphError):
    pass


class DegreeExceeded(GraphError):
    pass


class BadRotation(GraphError):
    pass


class NonPlanarEmbedding(GraphError):
    pass


class NotOnFace(KixError, ValueError):
    pass


class ParseError(KixError, ValueError):
    """Malformed graph or coloring text."""


class MultiplicityAboveK(KixError, ValueError):
    """The graph has a vertex pair joined by more than k edges."""


class PreconditionViolated(KixError, ValueError):
    pass


class EdgeAlreadyColored(KixError, ValueError):
    pass


class NotACycle(KixError, ValueError):
    pass


class SizeLimit(KixError, ValueError):
    pass


class Disconnected(KixError, ValueError):
    pass


class BindingInvalid(KixError, ValueError):
    pass


class LiftNotGood(KixError):
    """A lifted coloring violates goodness; carries the offending pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NoConfigurationFound(KixError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ExtensionFailed(KixError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class UnknownLemmaId(KixError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
