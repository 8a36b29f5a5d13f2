"""Exception hierarchy shared across the package."""


class EvidenceError(Exception):
    """Base class for every error raised by evcalc."""


class ValidationError(EvidenceError, ValueError):
    """A value or document violates a construction constraint."""


class FrameMismatchError(ValidationError):
    """Two values that must share a frame of discernment do not."""


class TotalConflictError(EvidenceError):
    """The evidence is irreconcilable: all probability mass is contradicted.

    `step` identifies the offending combination step when the error comes
    out of an n-ary fold, and is None otherwise.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class InconsistentScenarioError(EvidenceError, ValueError):
    """A Bayesian scenario assigns probability zero to the observed announcement."""
