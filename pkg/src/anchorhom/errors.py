"""Exception types raised across the package."""


class AnchorHomError(Exception):
    """Base class for all package errors."""

    kind = "error"


class InvalidParameterError(AnchorHomError, ValueError):
    kind = "invalid-parameter"


class HypothesisViolation(AnchorHomError, ValueError):
    """An input fails one of the hypotheses the Euler formula needs.

    ``hypothesis`` is a short machine-readable name such as ``"not a tree"``.
    """

    kind = "hypothesis-violation"

    def __init__(self, hypothesis, message):
        super().__init__(message)
        self.hypothesis = hypothesis


class ResourceError(AnchorHomError, RuntimeError):
    """A computation would exceed its configured size budget."""

    kind = "resource"

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class IntegrityError(AnchorHomError, RuntimeError):
    kind = "integrity"


class StateError(AnchorHomError, RuntimeError):
    kind = "state"
