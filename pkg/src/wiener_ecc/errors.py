"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all library errors."""


class EndpointOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class GraphTooLarge(GraphError):
    pass


class Graph6Error(GraphError):
    """A graph6 line could not be decoded."""


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class IllegalCharacter(Graph6Error):
    pass


class EdgeListError(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class TooSmall(GraphError):
    pass


class RangeUnsupported(GraphError):
    pass


class RetriesExhausted(GraphError):
    pass
