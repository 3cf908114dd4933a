"""Exception hierarchy shared across the package."""


class GraphStrengthError(Exception):
    """Base class for all package-specific errors."""


class UniverseMismatchError(GraphStrengthError, ValueError):
    """A node set or index does not belong to the expected node universe."""


class IncompleteLabelingError(GraphStrengthError, ValueError):
    """A total labeling was required but some nodes are unlabeled."""


class ContradictorySeedsError(GraphStrengthError, ValueError):
    """Positive and negative seed sets overlap."""


class NotSubmodularError(GraphStrengthError, ValueError):
    """A supplied set function violates the symmetric-submodular contract."""


class ConstructionUndefinedError(GraphStrengthError, ValueError):
    """The requested construction is undefined for the given inputs."""


class DeskScaleLimitError(GraphStrengthError, RuntimeError):
    """Exhaustive enumeration was requested beyond the supported size."""

    def __init__(self, free_nodes: int, limit: int):
        self.free_nodes = free_nodes
        self.limit = limit
        super().__init__(
            f"exhaustive enumeration over {free_nodes} free nodes exceeds the "
            f"limit of {limit}"
        )


class DataError(GraphStrengthError, ValueError):
    """Input data is malformed or inconsistent."""


class ParseError(DataError):
    """A text input file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateNormalizationError(GraphStrengthError, ValueError):
    """Class mass normalization hit a zero-mass class with nonzero proportion."""


class DegenerateBandwidthError(GraphStrengthError, ValueError):
    """The kernel bandwidth heuristic produced zero (all points coincide)."""


class ConvergenceError(GraphStrengthError, RuntimeError):
    """An iterative solver failed to reach its tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        if residual is not None:
            message = f"{message} (residual {residual:.3e})"
        super().__init__(message)
