"""Exception types raised by the solver lab.

Each failure mode named by the operation contracts gets its own class so
callers (and the CLI exit-code mapping) can tell them apart without string
matching.
"""


class MemsolveError(Exception):
    """Base class for all package errors."""


class BadParameter(MemsolveError):
    """A constructor or config argument is outside its documented range."""


class NonPositiveData(MemsolveError):
    """Log-log fitting was asked to fit values that are not strictly positive."""


class InsufficientData(MemsolveError):
    """Too few points remain for a fit after floor filtering."""


class TouchdownInput(MemsolveError):
    """A membrane profile comes within delta_touch of the bottom plate."""


class LinearSolveFailure(MemsolveError):
    """The linear solver could not meet its residual contract."""


class InternalInconsistency(MemsolveError):
    """A redundant internal cross-check failed; indicates a bug, not bad input."""


class NonConvergence(MemsolveError):
    """Fixed-point iteration exhausted its budget without meeting fp_tol."""

    def __init__(self, message, update_history=None):
        super().__init__(message)
        self.update_history = list(update_history) if update_history else []


class LeftAdmissibleSet(MemsolveError):
    """An iterate violated the convexity corridor 0 <= u'' <= r0."""


class TouchdownApproach(MemsolveError):
    """An iterate approached the bottom plate closer than delta_touch."""


class NoCrossing(MemsolveError):
    """The shooting integration never crossed zero inside the guard interval."""


class FoldNotBracketed(MemsolveError):
    """The pull-in sweep put its maximum at an endpoint, so no fold bracket exists."""
