"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the documented domain of an operation."""


class CapacityError(RuntimeError):
    """A configured resource cap was exceeded; the question is undecided."""


class SigmaRangeError(OverflowError):
    """A divisor-sum product left the supported 64-bit range."""
