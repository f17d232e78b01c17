"""Exception hierarchy shared by every module.

The CLI maps :class:`InputError` subclasses to exit code 2 and
:class:`SizeError` subclasses to exit code 3.
"""


class GraphError(ValueError):
    """Base class for all library errors."""


class InputError(GraphError):
    pass


class SizeError(GraphError):
    pass


class MalformedGraph6(InputError):
    pass


class UnsupportedFormat(InputError):
    """sparse6 / digraph6 input handed to the graph6 parser."""


class Graph6Overflow(SizeError):
    pass


class ParseError(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class SelfLoop(InputError):
    pass


class UnknownName(InputError):
    pass


class BadParams(InputError):
    pass


class TooLarge(SizeError):
    pass


class NoConverge(GraphError):
    """Eigenvalue iteration cap exceeded; should never happen on adjacency matrices."""


class InertiaMismatch(GraphError):
    """Floating-point inertia disagrees with the exact rank computation."""


class EmptyGraph(GraphError):
    """Graph has no edges, so one of the signed energies vanishes."""


class NegativeP(GraphError):
    pass
