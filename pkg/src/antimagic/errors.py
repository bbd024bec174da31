"""Exception types shared across the package."""


class AntimagicError(Exception):
    """Base class for all package errors."""


class InfeasibleParameters(AntimagicError):
    """Parameters violate a precondition or an existence theorem."""


class FormulaBreakdown(AntimagicError):
    """A constructed labeling failed its own verification gate."""


class LengthMismatch(AntimagicError):
    """Labeling length does not match the graph's edge count."""


class BudgetExceeded(AntimagicError):
    """An exact search exceeded its configured size or time budget."""


class TooLarge(AntimagicError):
    """Graph exceeds the hard size limit of an exact operation."""


class NotBipartite(AntimagicError):
    """Operation requires a connected bipartite graph."""


class WeightCollision(AntimagicError):
    """Join extension produced a new-vertex weight equal to a shifted old
    weight; the caller should retry with a different part size."""


class NoValidLabelingFound(AntimagicError):
    """Heuristic search exhausted its budget without a valid labeling."""
