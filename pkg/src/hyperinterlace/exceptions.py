"""Exception types raised across the package."""


class HypergraphError(ValueError):
    """Base class for structural problems with a hypergraph or its inputs."""


class UnknownVertexError(HypergraphError, KeyError):
    def __init__(self, label):
        super().__init__(f"unknown vertex {label!r}")
        self.label = label

    __str__ = ValueError.__str__


class UnknownEdgeError(HypergraphError, KeyError):
    def __init__(self, label):
        super().__init__(f"unknown edge {label!r}")
        self.label = label

    __str__ = ValueError.__str__


class IsolatedVertexError(HypergraphError):
    """The normalized Laplacian needs every vertex to lie in some edge."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        names = ", ".join(self.vertices)
        super().__init__(f"isolated vertices (degree 0): {names}")


class PreconditionError(HypergraphError):
    """A verifier was called on an instance outside its hypotheses."""


class DimensionMismatchError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


class DocumentError(HypergraphError):
    """Malformed or invalid hypergraph document."""
