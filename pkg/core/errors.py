"""Exception hierarchy. Refusals that are ordinary outcomes are values, not errors."""


class GraphError(Exception):
    """Base class for every error raised by this project."""


class GraphFormatError(GraphError, ValueError):
    """Edge-list text that does not describe a simple graph."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class PerfectOrderError(GraphError, ValueError):
    """An elimination order that is not perfect was used where one is required."""


class GeneratorError(GraphError, RuntimeError):
    """A corpus generator hit its retry or resample bound."""
