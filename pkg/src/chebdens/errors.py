"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A configured cap (sieve bound, enumeration size, search depth) was exceeded."""


class RamifiedPrimeError(ValueError):
    """Splitting behaviour was requested at a prime excluded from the model."""


class ContainmentError(ValueError):
    """A density argument violates a required containment (e.g. d(A) > d(C))."""


class InconsistencyError(ValueError):
    """Inputs describe an impossible configuration (density > 1, broken monotonicity, ...)."""


class HypothesisFailureError(ValueError):
    """A positivity hypothesis required by the bound pipeline is violated."""


class InvariantViolationError(RuntimeError):
    """An internal invariant that should hold by construction failed."""


class ModelFormatError(ValueError):
    """An extension-model description could not be parsed or failed validation."""
