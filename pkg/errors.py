"""
Exception hierarchy for tinyColor

Library code raises these; the client scripts turn them into messages and
exit codes.
"""


class TinyColorError(Exception):
    """Base class for all tinyColor errors"""


class GraphError(TinyColorError):
    """Invalid edge operation on the graph store"""


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"Edge {{{u}, {v}}} already present")
        self.u, self.v = u, v


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"Self-loop on node {u} not allowed")
        self.u = u


class MissingEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"Edge {{{u}, {v}}} not present")
        self.u, self.v = u, v


class UnknownNode(GraphError):
    def __init__(self, v, n):
        super().__init__(f"Node {v} out of range [0, {n})")
        self.v, self.n = v, n


class DomainError(TinyColorError):
    """A parameter is outside its allowed range"""


class SizeLimit(TinyColorError):
    """Brute-force enumeration requested above its node limit"""


class PaletteExhausted(TinyColorError):
    """No free color left in the palette. Means an invariant was broken."""

    def __init__(self, node, palette_size):
        super().__init__(f"No free color in [1, {palette_size}] for node {node}")
        self.node, self.palette_size = node, palette_size


class InvariantViolation(TinyColorError):
    """A run-time invariant check failed"""


class ParseError(TinyColorError):
    """Malformed workload file"""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message
