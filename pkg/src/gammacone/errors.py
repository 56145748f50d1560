"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input; message carries the position."""


class EmptyGraphError(ValueError):
    """A construction or parse produced a graph with no vertices."""


class DisconnectedGraphError(ValueError):
    """Raised by curvature and spectral entry points on disconnected input."""

    def __init__(self, components, context=""):
        self.components = tuple(tuple(c) for c in components)
        where = f" ({context})" if context else ""
        parts = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.components)
        super().__init__(
            f"graph is not connected{where}: components {parts}"
        )
