"""Exception types shared across the package."""

from __future__ import annotations


class GamowSusyError(Exception):
    """Base class for all package errors."""


class DomainError(GamowSusyError, ValueError):
    """Input outside an operation's stated domain."""


class RangeError(GamowSusyError, ArithmeticError):
    """Result left the representable range (overflow horizon).

    ``last_r`` carries the last radius at which the computation was still
    valid, when applicable.
    """

    def __init__(self, message: str, last_r: float | None = None):
        super().__init__(message)
        self.last_r = last_r


class AccuracyError(GamowSusyError, ArithmeticError):
    """Estimated relative error exceeded the internal threshold.

    ``estimate`` carries the running error estimate that triggered the
    failure.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(f"{message} (estimated relative error {estimate:.3e})")
        self.estimate = estimate


class BranchError(GamowSusyError, ValueError):
    """Energy lies on the branch locus where no outgoing wavenumber exists."""


class ClassificationError(GamowSusyError, ValueError):
    """Real energy: neither decaying nor growing."""


class NodeError(GamowSusyError, ArithmeticError):
    """Transformation function (near-)vanishes at an evaluation point."""

    def __init__(self, message: str, r: float):
        super().__init__(f"{message} at r={r!r}")
        self.r = r


class StiffnessError(GamowSusyError, ArithmeticError):
    """Adaptive step size underflowed."""


class DegenerateInputError(GamowSusyError, ValueError):
    """Input field is degenerate (e.g. vanishes where a ratio is needed)."""


class NormalizationError(GamowSusyError, ValueError):
    """State cannot be normalized (divergent norm)."""
